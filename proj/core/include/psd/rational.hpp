#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "psd/error.hpp"

namespace psd {

// Exact arbitrary-precision arithmetic. cpp_rational keeps the canonical
// form (positive denominator, coprime parts) on every operation.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Builds n/d with sign normalization; d = 0 raises zero_denominator.
Rational make_rational(Int numerator, Int denominator);

// Accepts "n", "-n", "n/d" with optional surrounding whitespace.
Rational parse_rational(std::string_view text);

// "n" when the denominator is 1, "n/d" otherwise.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

Int factorial(unsigned n);

// binomial(n, k) for integer n >= 0; k > n yields 0.
Int binomial(const Int& n, unsigned k);

} // namespace psd
