#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "psd/polynomial.hpp"
#include "psd/series.hpp"

namespace psd {

enum class SpecKind { polynomial, rational, series };

/* A covariance characteristic V(x) as supplied by the user: an exact
 * polynomial, a ratio of polynomials, or a raw coefficient window.
 * Synthesizable specs have V(0) = 0 and V'(0) != 0; anything else is
 * still representable and is rejected with a diagnostic only when a
 * synthesis is actually attempted. */
struct CovarianceSpec {
    SpecKind kind = SpecKind::polynomial;
    Polynomial numer;
    Polynomial denom = Polynomial::constant(1);
    Series raw = Series::zero(1);           // series kind only
    std::optional<Rational> radius;         // advisory domain hint (0, R)
    std::string preset;                     // regenerable named series, if any
};

CovarianceSpec spec_from_polynomial(Polynomial p);
CovarianceSpec spec_from_rational(Polynomial numer, Polynomial denom);
CovarianceSpec spec_from_series(Series v);

// Named built-in specs; "sqrt-example" is 2(1 - sqrt(1-x)).
CovarianceSpec preset_spec(std::string_view name, int order);

/* Parses the expression grammar shared with the command line tool:
 * integers, variable x, + - * / ^ with integer exponents, parentheses.
 * Rational constants are spelled as divisions (1/2). Raises parse_error
 * with a character position, or zero_denominator for a vanishing
 * denominator. */
CovarianceSpec parse_spec(std::string_view text);

// Taylor expansion of V at 0 to the requested order.
Series to_series(const CovarianceSpec& spec, int order);

// Exact value for polynomial/rational kinds; truncated evaluation for
// series kinds.
Rational evaluate(const CovarianceSpec& spec, const Rational& x);

std::string to_string(const CovarianceSpec& spec);

struct UForm {
    Series u;   // U with V(x) = x (1 + x U(x))
    bool valid = false;
};

// Extracts U from the normal form V = x(1 + x U(x)); requires V(0) = 0 and
// V'(0) = 1 (not_normal_form otherwise).
UForm u_form(const CovarianceSpec& spec, int order);
UForm u_form_from_series(const Series& v);

/* Covariance of the power series distribution of omega, as a series at 0:
 * inverts x(y) = y omega'/omega and returns f/f' in x. Requires x(0) = 0,
 * i.e. omega(0) != 0 (shift the distribution first otherwise). */
Series covariance_from_omega(const Series& omega, int order);

/* Generalization used by the transform round trips: for omega vanishing to
 * order r at 0 and with x(y) - r supported on powers of y^stride, returns
 * the covariance series about the base point r. */
struct LocalCovariance {
    int base_point = 0;   // x-value around which the series is expanded
    int arg_stride = 1;   // detected y^n structure of omega
    Series v = Series::zero(1);
};
LocalCovariance covariance_from_omega_at(const Series& omega);

/* Positivity of V on (0, min(R, 8)) checked by exact evaluation at 64
 * equispaced rational sample points; a heuristic, not a proof. Without a
 * domain hint, positivity near 0 is what is required (the sampled prefix
 * before the first sign change is reported). */
struct PositivityReport {
    bool ok = false;
    Rational sampled_upper = 0;                  // largest verified sample
    std::optional<Rational> first_nonpositive;   // sample that failed, if any
};
PositivityReport sample_positivity(const CovarianceSpec& spec);

} // namespace psd
