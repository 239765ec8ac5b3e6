#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "psd/covariance.hpp"
#include "psd/rational.hpp"
#include "psd/synthesis.hpp"

namespace psd {

/* splitmix64: the standard 64-bit mixer (Steele, Lea, Vigna constants).
 * Deterministic, splittable by seeding, good enough for Monte Carlo
 * sampling of small discrete distributions. */
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

/* A materialized power series distribution: omega coefficients a_k >= 0
 * and an evaluation point y >= 0. Probabilities are taken against the
 * truncated sum omega_N(y) = sum_{k<N} a_k y^k, so they add to one exactly
 * over the retained support; the mass the infinite model would put beyond
 * the truncation is estimated separately as tail_bound. */
struct PsdModel {
    std::vector<Rational> a;
    Rational y = 0;
    int order = 0;
};

// Validates nonnegativity and that some a_k y^k > 0.
PsdModel make_model(std::vector<Rational> a, Rational y);

Rational omega_value(const PsdModel& model);

// p_k = a_k y^k / omega_N(y); order_exceeded beyond the window.
Rational pmf(const PsdModel& model, int k);

/* Ratio-test estimate of the relative mass beyond the truncation: with
 * r = max of the last few term ratios, bound the tail by the geometric
 * extrapolation of the last retained term. +inf (HUGE_VAL) when the terms
 * are not decaying. Float view only. */
double tail_bound(const PsdModel& model);

struct MomentReport {
    Rational mean = 0;
    Rational variance = 0;
    double mean_approx = 0;
    double variance_approx = 0;
    Rational x_value = 0;   // y omega'/omega, equal to mean by construction
    Rational v_of_x = 0;    // V(x_value) when a covariance spec is supplied
    double tail = 0;
};

/* Mean and variance of the truncated model through the omega-derivative
 * formulas; exact rationals. Raises tail_too_heavy when the tail bound
 * exceeds the named tolerance. */
MomentReport moments(const PsdModel& model, double tail_tolerance = 1e-9);

/* count iid draws by inverse CDF on the truncated pmf; deterministic for a
 * fixed seed. Requires tail_bound < 1e-9. */
std::vector<int> sample(const PsdModel& model, std::int64_t count, std::uint64_t seed);

struct SampleStats {
    double mean = 0;
    double variance = 0;    // unbiased
    double fourth_central = 0;
};
SampleStats summarize(std::span<const int> draws);

/* |truncated variance - V(x)| must fall below this for the curve check;
 * documented formula, monotone in the tail bound: N^2 * tail + 1e-12. */
double variance_tolerance(double tail, int order);

struct VariancePoint {
    Rational x = 0;
    bool ok = false;
    std::string error;      // per-point failure, collected not fatal
    MomentReport report;
};

/* For each x: y from the truncated mean equation, model from the c-table,
 * moments, and V(x) for comparison. The variance column is the empirical
 * check that the model's variance equals V at its mean. */
std::vector<VariancePoint> variance_curve(const std::vector<Rational>& c,
                                          const CovarianceSpec& v_spec,
                                          std::span<const Rational> xs);

} // namespace psd
