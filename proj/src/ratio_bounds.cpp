#include "besselbounds/ratio_bounds.hpp"

#include <string>

namespace besselbounds {

namespace {

// x / (a + sqrt(a^2 + x^2)); zero at x = 0 for any a >= 0 with a + x > 0.
double kernel(double a, double x) {
    if (x == 0.0) return 0.0;
    return x / (a + std::hypot(a, x));
}

}  // namespace

double sqrt_surrogate(double t) {
    require_nonnegative(t, "t");
    return 1.0 / (t + std::sqrt(1.0 + t * t));
}

Interval best_exponential_bounds(double t) {
    if (!(t >= 0.0 && t <= 1.0)) {
        throw DomainError("best_exponential_bounds: t must lie in [0, 1], got " +
                          std::to_string(t));
    }
    return Interval{std::exp(-t), std::exp(-BoundConstants::alpha0() * t)};
}

Interval amos_ratio_bounds(const EvalPoint& p) {
    return Interval{kernel(p.nu() + 1.0, p.x()), kernel(p.nu() + 0.5, p.x())};
}

double amos_sharp_lower(const EvalPoint& p) {
    const double x = p.x();
    if (x == 0.0) return 0.0;
    const double a = p.nu() + 1.5;
    return x / (p.nu() + 0.5 + std::hypot(a, x));
}

Interval exp_ratio_bounds(const EvalPoint& p) {
    if (ratio_branch(p) != RatioBranch::Exponential) {
        throw RegimeError("exp_ratio_bounds: requires nu + 1 <= x (nu=" +
                          std::to_string(p.nu()) + ", x=" + std::to_string(p.x()) + ")");
    }
    const double x = p.x();
    return Interval{std::exp(-(p.nu() + 1.0) / x),
                    std::exp(-BoundConstants::alpha0() * (p.nu() + 0.5) / x)};
}

RatioBranch ratio_branch(const EvalPoint& p) {
    return p.nu() + 1.0 <= p.x() ? RatioBranch::Exponential : RatioBranch::Amos;
}

Interval combined_ratio_bounds(const EvalPoint& p) {
    return ratio_branch(p) == RatioBranch::Exponential ? exp_ratio_bounds(p)
                                                       : amos_ratio_bounds(p);
}

}  // namespace besselbounds
