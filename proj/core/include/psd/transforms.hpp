#pragma once

#include "psd/covariance.hpp"
#include "psd/rational.hpp"
#include "psd/series.hpp"

namespace psd {

/* One element of the covariance transformation group, acting as
 *
 *   V(x)      ->  k n^2 V((x - m)/(k n))
 *   omega(y)  ->  C y^m (omega(y^n))^k
 *
 * with m = shift_m (negative shifts allowed when omega vanishes deeply
 * enough), k = power_k, n = argpow_n. scale_C is recorded for display
 * only; it never changes a normalized coefficient table. */
struct TransformSpec {
    int shift_m = 0;
    int power_k = 1;
    int argpow_n = 1;
    Rational scale_C = 1;
};

// Raises invalid_argument unless power_k >= 1, argpow_n >= 1, scale_C > 0.
void validate(const TransformSpec& t);

/* k n^2 V((x - m)/(k n)) composed symbolically for polynomial and rational
 * specs. Series-kind specs are Taylor-shifted on the truncated window,
 * which is exact only for polynomial content; shifts beyond the
 * re-expansion budget raise unrepresentable_composition. */
CovarianceSpec transform_covariance(const CovarianceSpec& spec, const TransformSpec& t);

/* y^m (omega(y^n))^k truncated to the requested order (C applied as 1,
 * recorded separately on the spec). Negative shifts require the first |m|
 * coefficients of the composed series to vanish (shift_underflow). */
Series transform_omega(const Series& omega, const TransformSpec& t, int order);

/* Checks Lemma-style consistency: the covariance computed from the
 * transformed omega (a series about its base point) must equal the
 * symbolically transformed covariance spec re-expanded about the same
 * point. Compares min(order, windows) coefficients exactly. */
bool verify_transform_roundtrip(const Series& omega,
                                const CovarianceSpec& v_spec,
                                const TransformSpec& t,
                                int order);

// Taylor expansion of a polynomial/rational spec about x = at (exact);
// series kinds expand their truncated window.
Series expand_about(const CovarianceSpec& spec, const Rational& at, int order);

} // namespace psd
