#pragma once

#include <cmath>

#include "besselbounds/types.hpp"

namespace besselbounds {

struct BoundConstants {
    // Optimal rate alpha0 = -log(sqrt(2) - 1) = asinh(1) ~ 0.88137 for the
    // upper envelope exp(-alpha0 t) of sqrt(1 + t^2) - t on [0, 1].
    static double alpha0() { return std::asinh(1.0); }
};

// sqrt(1 + t^2) - t, evaluated as 1 / (t + sqrt(1 + t^2)).
double sqrt_surrogate(double t);

// [exp(-t), exp(-alpha0 t)], which brackets sqrt_surrogate(t) for t in [0, 1].
Interval best_exponential_bounds(double t);

// [x / (nu+1 + sqrt(x^2 + (nu+1)^2)), x / (nu+1/2 + sqrt(x^2 + (nu+1/2)^2))].
Interval amos_ratio_bounds(const EvalPoint& p);

// x / (nu+1/2 + sqrt(x^2 + (nu+3/2)^2)). Sharper than the lower end of
// amos_ratio_bounds; only used as a cross-check.
double amos_sharp_lower(const EvalPoint& p);

// [exp(-(nu+1)/x), exp(-alpha0 (nu+1/2)/x)]. Requires nu + 1 <= x and throws
// RegimeError otherwise.
Interval exp_ratio_bounds(const EvalPoint& p);

enum class RatioBranch { Exponential, Amos };

// Exponential when nu + 1 <= x, Amos otherwise.
RatioBranch ratio_branch(const EvalPoint& p);

Interval combined_ratio_bounds(const EvalPoint& p);

}  // namespace besselbounds
