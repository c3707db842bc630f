#pragma once

// Skellam-distribution layer: log-space mass function, two-sided bounds on
// exp(-x) I_nu(x) at integer order, mass-function bounds, the hazard function
// 1 / (H + 1) and the tail concentration interval.

#include <cstdint>

#include "besselbounds/types.hpp"

namespace besselbounds {

// ln P[W = n] = -(l1 + l2) + (n/2)(ln l1 - ln l2) + x + ln(exp(-x) I_|n|(x)),
// x = 2 sqrt(l1 l2). Finite for rates and |n| up to at least 1e6.
double skellam_log_pmf(const SkellamParams& params, std::int64_t n);

enum class ScaledBesselRegime {
    OrderWithinArgument,  // nu <= x
    OrderBeyondArgument,  // nu > x, Beta-function factors
};

struct ScaledBesselBounds {
    Interval interval;
    // Natural logs of the interval ends (-inf for an exact zero).
    Interval log_interval;
    ScaledBesselRegime regime = ScaledBesselRegime::OrderWithinArgument;
    // [x] < 2: exp(-x) I_0(x) was bracketed with the geometric H bounds
    // instead of L(0, x) and U(0, x).
    bool geometric_fallback = false;
};

// Bounds on exp(-x) I_nu(x) for integer nu >= 0. With allow_fallback = false
// an argument with [x] < 2 raises RegimeError instead of falling back.
ScaledBesselBounds scaled_bessel_bounds_int(std::int64_t nu, double x,
                                            bool allow_fallback = true);

// Bounds on P[W = n] for W ~ Skellam(l1, l2), obtained from
// scaled_bessel_bounds_int(|n|, x) and the factor
// (l1/l2)^(n/2) exp(-(sqrt(l1) - sqrt(l2))^2).
Interval skellam_pmf_bounds(const SkellamParams& params, std::int64_t n,
                            bool allow_fallback = true);

// Hazard function P[W = nu] / P[W >= nu] = 1 / (H(nu, 2 lambda) + 1) for
// Skellam(lambda, lambda).
Interval skellam_hazard_bounds(double nu, double lambda);

struct ConcentrationReport {
    std::int64_t nu = 0;
    double lambda = 0.0;
    Interval interval;                // on P[|W| > nu]
    Interval h_interval;              // on H(nu, 2 lambda)
    Interval scaled_bessel_interval;  // on exp(-2 lambda) I_nu(2 lambda)
    bool upper_clamped = false;       // upper end capped at 1
    bool h_lower_clamped = false;
};

// P[|W| > nu] = 2 H(nu, 2 lambda) exp(-2 lambda) I_nu(2 lambda), bracketed by
// the product of the two factor intervals. Requires [2 lambda] >= 2.
ConcentrationReport concentration_bounds(std::int64_t nu, double lambda);

}  // namespace besselbounds
