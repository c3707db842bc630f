#include "besselbounds/skellam.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "besselbounds/hazard_bounds.hpp"
#include "besselbounds/ratio_bounds.hpp"
#include "besselbounds/special_core.hpp"

namespace besselbounds {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double safe_log(double v) { return v > 0.0 ? std::log(v) : kNegInf; }

Interval exp_interval(const Interval& logs) {
    return Interval{std::exp(logs.lower), std::exp(logs.upper)};
}

void require_order(std::int64_t nu) {
    if (nu < 0) throw DomainError("order must be a non-negative integer, got " + std::to_string(nu));
}

// -(l1 + l2) + 2 sqrt(l1 l2) = -(sqrt(l1) - sqrt(l2))^2
double log_rate_gap(const SkellamParams& params) {
    const double d = std::sqrt(params.lambda1()) - std::sqrt(params.lambda2());
    return -d * d;
}

}  // namespace

double skellam_log_pmf(const SkellamParams& params, std::int64_t n) {
    const double x = params.x();
    const auto order = static_cast<double>(n < 0 ? -n : n);
    const double log_scaled = scaled_bessel_i(EvalPoint(order, x)).scaled.log_value;
    const double skew = params.symmetric()
                            ? 0.0
                            : 0.5 * static_cast<double>(n) *
                                  (std::log(params.lambda1()) - std::log(params.lambda2()));
    return log_rate_gap(params) + skew + log_scaled;
}

ScaledBesselBounds scaled_bessel_bounds_int(std::int64_t nu, double x, bool allow_fallback) {
    require_order(nu);
    require_nonnegative(x, "x");
    const auto order = static_cast<double>(nu);

    ScaledBesselBounds out;
    out.regime = order <= x ? ScaledBesselRegime::OrderWithinArgument
                            : ScaledBesselRegime::OrderBeyondArgument;
    const double xf = std::floor(x);
    if (xf < 2.0 && !allow_fallback) {
        throw RegimeError("scaled_bessel_bounds_int: requires [x] >= 2, got x=" +
                          std::to_string(x));
    }
    if (x == 0.0) {
        const double v = nu == 0 ? 1.0 : 0.0;
        out.interval = Interval{v, v};
        out.log_interval = Interval{safe_log(v), safe_log(v)};
        out.geometric_fallback = true;
        return out;
    }

    const EvalPoint origin(0.0, x);

    // exp(-x) I_0(x) = 1 / (1 + 2 H(0, x)).
    Interval h0;
    if (xf >= 2.0) {
        h0 = Interval{std::max(0.0, lower_h_bound(origin)), upper_h_bound(origin)};
    } else {
        h0 = geometric_h_bounds(origin);
        out.geometric_fallback = true;
    }
    const double log_i0_lower = -std::log1p(2.0 * h0.upper);
    const double log_i0_upper = -std::log1p(2.0 * h0.lower);

    const double alpha = BoundConstants::alpha0();
    double log_lower = 0.0;
    double log_upper = 0.0;
    if (out.regime == ScaledBesselRegime::OrderWithinArgument) {
        // prod_{k<nu} of the exponential ratio bounds.
        log_lower = -order * (order + 1.0) / (2.0 * x);
        log_upper = -alpha * order * order / (2.0 * x);
    } else {
        // Orders up to [x] use the exponential bounds; the rest use
        // x/(k+1/2+x) and (x/2)/(k+1+x/2), whose products are Beta functions.
        const double m = order - xf;
        log_lower = -xf * (xf + 1.0) / (2.0 * x) + log_beta(xf + x / 2.0 + 1.0, m) +
                    m * std::log(x / 2.0) - log_gamma(m);
        log_upper = -alpha * xf * xf / (2.0 * x) + log_beta(xf + x + 0.5, m) +
                    m * std::log(x) - log_gamma(m);
    }

    out.log_interval = Interval{log_lower + log_i0_lower, log_upper + log_i0_upper};
    out.interval = exp_interval(out.log_interval);
    return out;
}

Interval skellam_pmf_bounds(const SkellamParams& params, std::int64_t n, bool allow_fallback) {
    const std::int64_t order = n < 0 ? -n : n;
    const ScaledBesselBounds sb = scaled_bessel_bounds_int(order, params.x(), allow_fallback);
    const double skew = params.symmetric()
                            ? 0.0
                            : 0.5 * static_cast<double>(n) *
                                  (std::log(params.lambda1()) - std::log(params.lambda2()));
    const double shift = log_rate_gap(params) + skew;
    return exp_interval(Interval{sb.log_interval.lower + shift, sb.log_interval.upper + shift});
}

Interval skellam_hazard_bounds(double nu, double lambda) {
    require_positive(lambda, "lambda");
    const HazardBoundReport h = h_bounds(EvalPoint(nu, 2.0 * lambda));
    return Interval{1.0 / (h.interval.upper + 1.0), 1.0 / (h.interval.lower + 1.0)};
}

ConcentrationReport concentration_bounds(std::int64_t nu, double lambda) {
    require_order(nu);
    require_positive(lambda, "lambda");
    const double x = 2.0 * lambda;
    if (std::floor(x) < 2.0) {
        throw RegimeError("concentration_bounds: requires [2 lambda] >= 2, got lambda=" +
                          std::to_string(lambda));
    }

    const HazardBoundReport h = h_bounds(EvalPoint(static_cast<double>(nu), x));
    const ScaledBesselBounds sb = scaled_bessel_bounds_int(nu, x, false);

    ConcentrationReport report;
    report.nu = nu;
    report.lambda = lambda;
    report.h_interval = h.interval;
    report.scaled_bessel_interval = sb.interval;
    report.h_lower_clamped = h.lower_clamped;

    const double ln2 = std::numbers::ln2;
    report.interval.lower =
        std::exp(ln2 + safe_log(h.interval.lower) + sb.log_interval.lower);
    report.interval.upper =
        std::exp(ln2 + safe_log(h.interval.upper) + sb.log_interval.upper);
    if (report.interval.upper > 1.0) {
        report.interval.upper = 1.0;
        report.upper_clamped = true;
    }
    return report;
}

}  // namespace besselbounds
