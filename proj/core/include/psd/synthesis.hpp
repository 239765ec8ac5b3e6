#pragma once

#include <optional>
#include <vector>

#include "psd/covariance.hpp"
#include "psd/series.hpp"

namespace psd {

/* The quadrature series of a normal-form covariance V = z(1 + z U(z)):
 *
 *   s(z) = z exp(int (1/V - 1/z) dz),   b(z) = exp(int z/V dz),
 *   tau(z) = z / s(z),
 *
 * all antiderivatives taken with zero constant term, so s'(0) = 1,
 * b(0) = 1, tau(0) = 1. */
struct QuadratureSeries {
    Series s = Series::zero(1);
    Series b = Series::zero(1);
    Series tau = Series::zero(1);
    int order = 0;
};

// Requires V[0] = 0, V[1] = 1 (not_normal_form otherwise).
QuadratureSeries quadratures(const Series& v, int order);

/* Coefficient table of omega(y) = b(s^{-1}(y)) by Lagrange inversion:
 *
 *   c_0 = b(0) = 1,   c_k = (1/k) [z^{k-1}] b'(z) tau(z)^k   (k >= 1).
 */
std::vector<Rational> coefficients_lagrange(const QuadratureSeries& q, int count);

/* The same table through the first-order ODE satisfied by
 * g(z) = b'(z) tau(z)^{a+1}: with U = u_1 + u_2 z + ... the coefficients
 * t_k of g obey
 *
 *   (k+1) t_{k+1} = t_k + (a-k) (u_1 t_k + u_2 t_{k-1} + ... + u_{k+1} t_0),
 *
 * t_0 = 1, and c_{m+1} = t_m(a=m)/(m+1). Independent of the Lagrange
 * route; the two must agree exactly. */
std::vector<Rational> coefficients_recurrence(const UForm& u, int count);

// c_k -> c_k lambda^k, the reparameterization y -> y/lambda of omega.
std::vector<Rational> rescale_coefficients(std::vector<Rational> c, const Rational& lambda);

/* Validity verdict for "V is the covariance of a PSD": every clause of the
 * sufficiency conditions checked independently. tau0 carries the reported
 * normalization (y_scale). */
struct ValidityVerdict {
    bool analytic_proxy_ok = false;
    bool positivity_ok = false;
    bool tau0_nonzero = false;
    bool tau0_positive = false;
    bool all_c_nonneg = false;
    std::optional<int> first_negative_index;
    Rational sampled_upper = 0;

    bool valid() const {
        return analytic_proxy_ok && positivity_ok && tau0_nonzero && tau0_positive && all_c_nonneg;
    }
};

ValidityVerdict validate_covariance(const QuadratureSeries& q,
                                    const std::vector<Rational>& c,
                                    const CovarianceSpec& spec,
                                    const Rational& tau0);

struct SynthesisResult {
    QuadratureSeries quadratures;   // of the normal-form base covariance
    int arg_stride = 1;             // n when V'(0) = n reduced via omega(y^n)
    Rational y_scale = 1;           // tau(0) of the reported table
    std::vector<Rational> c;        // c_0 .. c_{order-1}, scaled and expanded
    bool route_agreement = false;
    ValidityVerdict verdict;
};

/* Full pipeline: expand V, reduce an integer leading coefficient V'(0) = n
 * through the argument-power transform (the table is then that of
 * omega(y^n)), synthesize both coefficient routes, and validate. y_scale
 * rescales the reported table to a non-canonical normalization tau(0) =
 * y_scale. Raises not_normal_form when V(0) != 0 or V'(0) is not a
 * positive integer. */
SynthesisResult synthesize(const CovarianceSpec& spec, int order, const Rational& y_scale = 1);

/* Probability generating function P(z, x) as a series in z at the given
 * mean x: coefficients p_k = c_k y^k / omega(y) with y solving the
 * truncated mean equation x = y omega'(y)/omega(y). domain_error when x is
 * outside the truncated family's range, omega(y) <= 0, or the convergence
 * heuristic (partial sums of omega(y) moving more than 1e-12 over the last
 * four retained terms) rejects y. */
Series pgf(const std::vector<Rational>& c, const Rational& x, int z_order);

// Plain truncated-polynomial evaluation of s at x. Only meaningful well
// inside the convergence region; pgf and the oracles solve the mean
// equation instead.
Rational s_eval(const QuadratureSeries& q, const Rational& x);

// Solves x = y omega'(y)/omega(y) for y >= 0 on the truncated table
// (monotone when coefficients are nonnegative). Exact when Newton lands on
// a rational root; otherwise a high-precision rational approximation.
Rational solve_mean_y(const std::vector<Rational>& c, const Rational& x);

/* The generating-function identity y dP/dy - z dP/dz + x(y) P = 0 checked
 * coefficientwise in z on the truncated table: for every k < count,
 * q_k = c_k y^k / omega must satisfy y q_k' + (x(y) - k) q_k = 0 exactly,
 * with x(y) = y omega'/omega. Returns the first failing k, if any. */
std::optional<int> pgf_identity_violation(const std::vector<Rational>& c, int order, int count);

} // namespace psd
