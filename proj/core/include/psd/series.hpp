#pragma once

#include <vector>

#include "psd/rational.hpp"

namespace psd {

/* Truncated formal power series with exact rational coefficients.
 *
 * A Series of order N retains the coefficients of z^0 .. z^{N-1}; every
 * binary operation truncates its result to the smaller operand order, so
 * truncation is always explicit and no garbage coefficients are ever
 * materialized. Values are immutable after construction. */
class Series {
public:
    explicit Series(std::vector<Rational> coefficients);

    static Series zero(int order);
    static Series constant(const Rational& c, int order);
    static Series identity(int order);                              // z
    static Series monomial(const Rational& c, int power, int order); // c z^power

    int order() const { return static_cast<int>(coeffs_.size()); }

    // Unchecked access, 0 <= i < order.
    const Rational& operator[](int i) const { return coeffs_[static_cast<size_t>(i)]; }

    // Checked access; k >= order raises order_exceeded.
    const Rational& coefficient_of(int k) const;

    const std::vector<Rational>& coefficients() const { return coeffs_; }

    bool is_zero() const;

    // Index of the first nonzero coefficient; order() when all are zero.
    int valuation() const;

    // Keeps the first new_order coefficients; new_order must not exceed order.
    Series truncated(int new_order) const;

    // Zero-extends to new_order. Only meaningful when the series is known
    // exact beyond its window (a polynomial), so callers opt in explicitly.
    Series zero_extended(int new_order) const;

    // Horner evaluation of the retained polynomial at a rational point.
    Rational evaluate(const Rational& x) const;

    bool operator==(const Series& other) const = default;

    Series operator-() const;
    friend Series operator+(const Series& a, const Series& b);
    friend Series operator-(const Series& a, const Series& b);
    friend Series operator*(const Series& a, const Series& b);
    friend Series operator*(const Rational& c, const Series& a);

private:
    std::vector<Rational> coeffs_;
};

// q with q*b = a to truncation order; requires b[0] != 0 (division_by_non_unit).
Series div(const Series& a, const Series& b);

// Termwise derivative; order drops by one (a zero series of order 1 stays order 1).
Series differentiate(const Series& a);

// Antiderivative with zero constant term; order grows by one.
Series integrate(const Series& a);

// exp of a series with a[0] = 0 (nonzero_constant_term otherwise).
Series exp(const Series& a);

// log of a series with a[0] = 1 (constant_term_not_one otherwise).
Series log(const Series& a);

// f(g) with g[0] = 0 (nonzero_inner_constant otherwise); Horner scheme.
Series compose(const Series& f, const Series& g);

// Compositional inverse: g with f(g) = g(f) = z; requires f[0] = 0, f[1] != 0.
Series revert(const Series& f);

// Division by z^r; the first r coefficients must vanish. Order drops by r.
Series shift_down(const Series& a, int r);

// Multiplication by z^r; order grows by r.
Series shift_up(const Series& a, int r);

// f(c z): multiplies coefficient k by c^k.
Series scale_argument(const Series& f, const Rational& c);

// Prefix equality up to min(order, count) coefficients.
bool prefix_equal(const Series& a, const Series& b, int count);

} // namespace psd
