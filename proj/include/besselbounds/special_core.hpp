#pragma once

// High-precision reference evaluations for every quantity the bound modules
// estimate. Nothing in this header depends on the closed-form bounds; the
// sandwich tests compare the two.

#include <cstdint>

#include "besselbounds/types.hpp"

namespace besselbounds {

inline constexpr double kDefaultSeriesTol = 1e-15;
inline constexpr double kDefaultRatioTol = 1e-14;
inline constexpr double kDefaultHazardTol = 1e-12;
inline constexpr std::int64_t kRatioIterationCap = 100000;

// exp(-x) I_nu(x). log_value is -inf when value is exactly zero (nu > 0, x = 0).
// value may underflow to 0 for extreme arguments while log_value stays finite.
struct ScaledBessel {
    double value = 0.0;
    double log_value = 0.0;
};

struct ScaledBesselResult {
    ScaledBessel scaled;
    TruncationCertificate certificate;
};

// Sums the power series of I_nu(x) in extended precision, starting at the
// largest term and walking outward in both directions, with the exp(-x)
// factor folded into the log of the starting term. Relative error <= tol.
//
// Throws DomainError for bad arguments and ConvergenceError if the walk does
// not certify its tails within the iteration cap.
ScaledBesselResult scaled_bessel_i(const EvalPoint& p, double tol = kDefaultSeriesTol);

// I_{nu+1}(x) / I_nu(x), in [0, 1).
struct RatioValue {
    double value = 0.0;
};

// Continued fraction
//   I_{nu+1}/I_nu = 1 / (2(nu+1)/x + 1 / (2(nu+2)/x + ...))
// evaluated with the modified Lentz algorithm; stops when the update factor is
// within tol of 1. Returns exactly 0 at x = 0.
RatioValue bessel_ratio(const EvalPoint& p, double tol = kDefaultRatioTol);

struct HazardSum {
    double value = 0.0;
    TruncationCertificate certificate;
};

// H(nu, x) = sum_{k>=1} I_{nu+k}(x) / I_nu(x) from running products of
// bessel_ratio. The discarded tail after the n-th term P_n is bounded by
// P_n u / (1 - u) with u = x / (nu+n+1/2 + sqrt((nu+n+1/2)^2 + x^2)), the
// upper ratio bound at the next order; summation stops once that bound is
// <= tol relative to the partial sum.
HazardSum hazard_sum_oracle(const EvalPoint& p, double tol = kDefaultHazardTol);

// ln Gamma(z) for z > 0 (Lanczos, g = 7). Relative error about 1e-15 away
// from the zeros at z = 1 and z = 2, where the absolute error is of that size.
double log_gamma(double z);

double log_beta(double a, double b);

// B(a, b) = Gamma(a) Gamma(b) / Gamma(a + b), a, b > 0.
double beta_fn(double a, double b);

// Two-sided bound on the Gaussian tail integral int_t^inf exp(-u^2) du:
//   exp(-t^2) / (t + sqrt(t^2 + 2)) <= . <= exp(-t^2) / (t + sqrt(t^2 + 4/pi))
Interval gaussian_tail_bounds(double t);

// P[|W| > n] for W ~ Skellam(lambda, lambda), summed directly as
// 2 sum_{k>n} exp(-2 lambda) I_k(2 lambda) with a certified geometric tail.
// Only symmetric parameters are supported; throws DomainError otherwise.
double skellam_tail_oracle(const SkellamParams& params, std::int64_t n,
                           double tol = kDefaultHazardTol);

}  // namespace besselbounds
