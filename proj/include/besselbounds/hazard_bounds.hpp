#pragma once

#include <optional>

#include "besselbounds/types.hpp"

namespace besselbounds {

// F(nu, x) = x / (nu + sqrt(nu^2 + x^2)). Throws DomainError at nu = x = 0.
double f_kernel(double nu, double x);

// 1 - F(nu, x) without cancellation for x >> nu.
double one_minus_f_kernel(double nu, double x);

// Geometric-series bounds on H(nu, x), valid for all nu, x >= 0:
//   F(nu+1, x) (1 + F(nu+2, x)) <= H <= F(nu+1/2, x) / (1 - F(nu+3/2, x)).
Interval geometric_h_bounds(const EvalPoint& p);

// Lower bound L(nu, x) on H built from the exponential ratio bounds plus a
// Gaussian-sum estimate. Requires [nu] + 2 <= [x]; throws RegimeError
// otherwise. The value may be negative at extreme arguments.
double lower_h_bound(const EvalPoint& p);

// Upper bound U(nu, x) on H, same regime requirement as lower_h_bound.
double upper_h_bound(const EvalPoint& p);

enum class HazardRegime {
    GeometricOnly,  // [nu] + 2 >  [x]
    TwoRegime,      // [nu] + 2 <= [x]
};

HazardRegime hazard_regime(const EvalPoint& p);

enum class HBoundsMode {
    // [L, U] in the two-regime case, geometric bounds otherwise.
    Direct,
    // Intersection of both intervals wherever both apply.
    Tightest,
};

struct HazardBoundReport {
    EvalPoint point;
    Interval interval;
    HazardRegime regime;
    Interval geometric;
    // Raw [L, U] before clamping; present only in the two-regime case.
    std::optional<Interval> two_regime;
    // True when a negative L was replaced by 0 in interval.lower.
    bool lower_clamped = false;
};

HazardBoundReport h_bounds(const EvalPoint& p, HBoundsMode mode = HBoundsMode::Direct);

}  // namespace besselbounds
