#pragma once

#include <stdexcept>
#include <string>

namespace psd {

enum class errc {
    division_by_non_unit,
    nonzero_constant_term,
    constant_term_not_one,
    nonzero_inner_constant,
    not_invertible,
    order_exceeded,
    parse_error,
    zero_denominator,
    not_normal_form,
    not_revertible,
    tau_vanishes_at_zero,
    domain_error,
    tail_too_heavy,
    shift_underflow,
    unrepresentable_composition,
    fixture_corrupt,
    invalid_argument,
};

const char* errc_name(errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace psd
