#include "besselbounds/hazard_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "besselbounds/ratio_bounds.hpp"

namespace besselbounds {

namespace {

void require_two_regime(const EvalPoint& p, const char* who) {
    if (hazard_regime(p) != HazardRegime::TwoRegime) {
        throw RegimeError(std::string(who) + ": requires [nu] + 2 <= [x] (nu=" +
                          std::to_string(p.nu()) + ", x=" + std::to_string(p.x()) + ")");
    }
}

}  // namespace

double f_kernel(double nu, double x) {
    require_nonnegative(nu, "nu");
    require_nonnegative(x, "x");
    if (nu == 0.0 && x == 0.0) throw DomainError("f_kernel: F(0, 0) is undefined");
    if (nu == 0.0) return 1.0;
    return x / (nu + std::hypot(nu, x));
}

double one_minus_f_kernel(double nu, double x) {
    require_nonnegative(nu, "nu");
    require_nonnegative(x, "x");
    if (nu == 0.0 && x == 0.0) throw DomainError("one_minus_f_kernel: F(0, 0) is undefined");
    // 1 - x/(a+s) = (a + s - x)/(a + s) and s - x = a^2/(s + x).
    const double s = std::hypot(nu, x);
    return (nu + nu * nu / (s + x)) / (nu + s);
}

Interval geometric_h_bounds(const EvalPoint& p) {
    const double nu = p.nu();
    const double x = p.x();
    if (x == 0.0) return Interval{0.0, 0.0};
    return Interval{f_kernel(nu + 1.0, x) * (1.0 + f_kernel(nu + 2.0, x)),
                    f_kernel(nu + 0.5, x) / one_minus_f_kernel(nu + 1.5, x)};
}

double lower_h_bound(const EvalPoint& p) {
    require_two_regime(p, "lower_h_bound");
    const double nu = p.nu();
    const double x = p.x();
    const double nf = static_cast<double>(p.nu_floor());
    const double frac = p.nu_frac();
    const double xf = static_cast<double>(p.x_floor());

    const double a = nu + 1.5;
    const double gauss_head =
        2.0 * x * std::exp(-(nu + 1.0) / x) / (a + std::sqrt(a * a + 4.0 * x));

    const double b = xf + 1.5;
    const double gauss_cut =
        2.0 * x * std::exp(-(xf - nu - frac + 1.0) * (xf + nu - frac + 2.0) / (2.0 * x)) /
        (b + std::sqrt(b * b + 8.0 * x / std::numbers::pi));

    const double tail = std::exp(-(xf - nf - 1.0) * (xf + nu + frac) / (2.0 * x)) *
                        f_kernel(xf + frac, x) * (1.0 + f_kernel(xf + frac + 1.0, x));

    return gauss_head - gauss_cut + tail;
}

double upper_h_bound(const EvalPoint& p) {
    require_two_regime(p, "upper_h_bound");
    const double alpha = BoundConstants::alpha0();
    const double nu = p.nu();
    const double x = p.x();
    const double nf = static_cast<double>(p.nu_floor());
    const double frac = p.nu_frac();
    const double xf = static_cast<double>(p.x_floor());

    const double gauss =
        (2.0 * x / alpha) *
        (1.0 / (nu + std::sqrt(nu * nu + 8.0 * x / (std::numbers::pi * alpha))) -
         std::exp(-alpha * (x * x - nu * nu) / (2.0 * x)) /
             (x + std::sqrt(x * x + 4.0 * x / alpha)));

    const double tail = std::exp(-alpha * (xf - nf - 1.0) * (xf + nu + frac - 1.0) / (2.0 * x)) *
                        f_kernel(xf + frac - 0.5, x) / one_minus_f_kernel(xf + frac + 0.5, x);

    return gauss + tail;
}

HazardRegime hazard_regime(const EvalPoint& p) {
    return p.nu_floor() + 2 <= p.x_floor() ? HazardRegime::TwoRegime
                                           : HazardRegime::GeometricOnly;
}

HazardBoundReport h_bounds(const EvalPoint& p, HBoundsMode mode) {
    HazardBoundReport report{p, Interval{}, hazard_regime(p), geometric_h_bounds(p),
                             std::nullopt, false};
    if (report.regime == HazardRegime::GeometricOnly) {
        report.interval = report.geometric;
        return report;
    }

    const Interval raw{lower_h_bound(p), upper_h_bound(p)};
    report.two_regime = raw;
    report.interval = raw;
    if (report.interval.lower < 0.0) {
        report.interval.lower = 0.0;
        report.lower_clamped = true;
    }
    if (mode == HBoundsMode::Tightest) {
        report.interval.lower = std::max(report.interval.lower, report.geometric.lower);
        report.interval.upper = std::min(report.interval.upper, report.geometric.upper);
    }
    return report;
}

}  // namespace besselbounds
