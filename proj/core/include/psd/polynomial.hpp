#pragma once

#include <string>
#include <vector>

#include "psd/rational.hpp"
#include "psd/series.hpp"

namespace psd {

/* Dense exact polynomial over Rational. Unlike Series there is no
 * truncation: degrees grow under multiplication. Trailing zeros are
 * trimmed, the zero polynomial has degree -1. */
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);

    static Polynomial constant(const Rational& c);
    static Polynomial identity(); // x

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    // Coefficient of x^i; zero beyond the degree.
    const Rational& coeff(int i) const;

    const std::vector<Rational>& coefficients() const { return coeffs_; }

    // Index of the lowest nonzero coefficient; -1 for the zero polynomial.
    int valuation() const;

    Rational evaluate(const Rational& x) const;

    // p(x + t), exact Taylor shift.
    Polynomial shifted_arg(const Rational& t) const;

    // p(c x).
    Polynomial scaled_arg(const Rational& c) const;

    // Divide by x^r; the r lowest coefficients must vanish.
    Polynomial shifted_down(int r) const;

    Series to_series(int order) const;

    std::string to_string(std::string_view var = "x") const;

    bool operator==(const Polynomial& other) const = default;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, const Polynomial& a);

private:
    void trim();
    std::vector<Rational> coeffs_;
};

} // namespace psd
