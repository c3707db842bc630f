#include "besselbounds/cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include <json.hpp>

#include "besselbounds/cli/parallel.hpp"
#include "besselbounds/hazard_bounds.hpp"
#include "besselbounds/ratio_bounds.hpp"
#include "besselbounds/skellam.hpp"
#include "besselbounds/special_core.hpp"

namespace besselbounds::cli {

namespace {

constexpr std::size_t kMaxStoredViolations = 10000;
constexpr double kQuotientRelTol = 1e-10;
constexpr double kRecursionRelTol = 1e-9;

struct Sample {
    double nu = 0.0;
    double x = 0.0;
    const char* bound = "";
    Interval interval;
    double oracle = 0.0;
};

using Samples = std::vector<Sample>;

// Interval of half-width rel * |v| around v, for identities checked to a
// relative tolerance.
Interval around(double v, double rel) {
    const double pad = rel * std::fabs(v);
    return Interval{v - pad, v + pad};
}

std::vector<double> range(double start, double stop, double step) {
    GridSpec g{GridVar::Nu, start, stop, step, 0.0};
    std::vector<double> out;
    for (std::int64_t i = 0; i < g.count(); ++i) out.push_back(g.at(i));
    return out;
}

std::vector<double> grid_values(const GridSpec& g) {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(g.count()));
    for (std::int64_t i = 0; i < g.count(); ++i) out.push_back(g.at(i));
    return out;
}

class Runner {
public:
    Runner(const VerifyOptions& options, SweepReport& report) : options_(options), report_(report) {}

    void check(const std::string& name, std::int64_t n, const std::function<Samples(std::int64_t)>& fn) {
        auto per_point = parallel_map(n, fn);
        CheckSummary summary{name, 0, 0};
        for (const Samples& samples : per_point) {
            for (Sample s : samples) {
                s.interval.upper *= options_.perturb;
                ++summary.points;
                const double scale = s.oracle != 0.0 ? std::fabs(s.oracle) : 1.0;
                const double excursion =
                    std::max(s.oracle - s.interval.upper, s.interval.lower - s.oracle) / scale;
                report_.max_relative_slack = std::max(report_.max_relative_slack, excursion);
                if (!s.interval.contains(s.oracle, options_.slack)) {
                    ++summary.violations;
                    const bool above = s.oracle > s.interval.upper;
                    if (report_.violations.size() < kMaxStoredViolations) {
                        report_.violations.push_back(Violation{
                            name, s.nu, s.x,
                            std::string(s.bound) + (above ? ".upper" : ".lower"),
                            above ? s.interval.upper : s.interval.lower, s.oracle});
                    }
                }
            }
        }
        report_.points_checked += summary.points;
        report_.checks.push_back(summary);
    }

private:
    const VerifyOptions& options_;
    SweepReport& report_;
};

}  // namespace

std::string SweepReport::to_json() const {
    nlohmann::json j;
    j["points_checked"] = points_checked;
    j["max_relative_slack"] = max_relative_slack;
    j["passed"] = passed();
    j["checks"] = nlohmann::json::array();
    for (const CheckSummary& c : checks) {
        j["checks"].push_back({{"name", c.name}, {"points", c.points}, {"violations", c.violations}});
    }
    j["violations"] = nlohmann::json::array();
    for (const Violation& v : violations) {
        j["violations"].push_back({{"check", v.check},
                                   {"nu", v.nu},
                                   {"x", v.x},
                                   {"bound", v.bound_name},
                                   {"bound_value", v.bound_value},
                                   {"oracle_value", v.oracle_value}});
    }
    return j.dump(2);
}

SweepReport run_verification(const VerifyOptions& options) {
    if (options.nu_grid) options.nu_grid->validate();
    const bool full = options.preset == VerifyPreset::Full;

    SweepReport report;
    report.max_relative_slack = -std::numeric_limits<double>::infinity();
    Runner run(options, report);

    run.check("best_exponential", 10001, [](std::int64_t i) {
        const double t = static_cast<double>(i) * 1e-4;
        return Samples{{0.0, t, "best_exponential", best_exponential_bounds(t), sqrt_surrogate(t)}};
    });

    const std::vector<double> ratio_nu =
        options.nu_grid ? grid_values(*options.nu_grid) : range(0.0, 200.0, 0.25);
    const std::vector<double> ratio_x = range(0.5, 200.0, 0.5);
    const auto ratio_points = static_cast<std::int64_t>(ratio_nu.size() * ratio_x.size());
    run.check("ratio_bounds", ratio_points, [&](std::int64_t i) {
        const double nu = ratio_nu[static_cast<std::size_t>(i) / ratio_x.size()];
        const double x = ratio_x[static_cast<std::size_t>(i) % ratio_x.size()];
        const EvalPoint p(nu, x);
        const double oracle = bessel_ratio(p).value;
        Samples out{{nu, x, "amos", amos_ratio_bounds(p), oracle},
                    {nu, x, "combined", combined_ratio_bounds(p), oracle}};
        if (ratio_branch(p) == RatioBranch::Exponential) {
            out.push_back({nu, x, "exponential", exp_ratio_bounds(p), oracle});
        }
        return out;
    });

    const std::vector<double> quotient_nu = range(0.0, 200.0, 1.0);
    const std::vector<double> quotient_x = {0.5, 1.0, 5.0, 10.0, 50.0, 100.0, 200.0};
    run.check("ratio_quotient",
              static_cast<std::int64_t>(quotient_nu.size() * quotient_x.size()),
              [&](std::int64_t i) {
                  const double nu = quotient_nu[static_cast<std::size_t>(i) / quotient_x.size()];
                  const double x = quotient_x[static_cast<std::size_t>(i) % quotient_x.size()];
                  const double den = scaled_bessel_i(EvalPoint(nu, x)).scaled.value;
                  if (den < 1e-280) return Samples{};
                  const double num = scaled_bessel_i(EvalPoint(nu + 1.0, x)).scaled.value;
                  return Samples{{nu, x, "quotient", around(num / den, kQuotientRelTol),
                                  bessel_ratio(EvalPoint(nu, x)).value}};
              });

    const std::vector<double> hazard_nu =
        options.nu_grid ? grid_values(*options.nu_grid) : range(0.0, 199.5, 0.5);
    const std::vector<double> hazard_x = {2.0, 5.0, 10.0, 50.0, 100.0};
    run.check("hazard_bounds", static_cast<std::int64_t>(hazard_nu.size() * hazard_x.size()),
              [&](std::int64_t i) {
                  const double nu = hazard_nu[static_cast<std::size_t>(i) / hazard_x.size()];
                  const double x = hazard_x[static_cast<std::size_t>(i) % hazard_x.size()];
                  const EvalPoint p(nu, x);
                  const double h = hazard_sum_oracle(p).value;
                  const HazardBoundReport r = h_bounds(p);
                  Samples out{{nu, x, "h_bounds", r.interval, h},
                              {nu, x, "geometric", r.geometric, h}};
                  const double next = hazard_sum_oracle(EvalPoint(nu + 1.0, x)).value;
                  const double ratio = bessel_ratio(p).value;
                  out.push_back({nu, x, "recursion", around(ratio * (1.0 + next), kRecursionRelTol), h});
                  return out;
              });

    const GridSpec fig3{GridVar::X, 2.0, 100.0, full ? 0.01 : 0.1, 0.0};
    run.check("scaled_bessel_i0", fig3.count(), [&](std::int64_t i) {
        const double x = fig3.at(i);
        return Samples{{0.0, x, "scaled_bessel_bounds", scaled_bessel_bounds_int(0, x).interval,
                        scaled_bessel_i(EvalPoint(0.0, x)).scaled.value}};
    });

    std::vector<std::pair<std::int64_t, double>> int_points;
    for (double x : {10.0, 50.0, 100.0}) {
        for (std::int64_t nu = 0; nu <= static_cast<std::int64_t>(2 * x); ++nu) int_points.emplace_back(nu, x);
    }
    run.check("scaled_bessel_int", static_cast<std::int64_t>(int_points.size()), [&](std::int64_t i) {
        const auto [nu, x] = int_points[static_cast<std::size_t>(i)];
        return Samples{{static_cast<double>(nu), x, "scaled_bessel_bounds",
                        scaled_bessel_bounds_int(nu, x).interval,
                        scaled_bessel_i(EvalPoint(static_cast<double>(nu), x)).scaled.value}};
    });

    const std::vector<double> lambdas = full ? std::vector<double>{1.0, 5.0, 25.0, 100.0}
                                             : std::vector<double>{1.0, 5.0, 25.0};
    std::vector<std::pair<double, std::int64_t>> skellam_points;
    for (double lambda : lambdas) {
        const auto top = static_cast<std::int64_t>(4 * lambda);
        for (std::int64_t n = 0; n <= top; ++n) skellam_points.emplace_back(lambda, n);
    }
    run.check("skellam", static_cast<std::int64_t>(skellam_points.size()), [&](std::int64_t i) {
        const auto [lambda, n] = skellam_points[static_cast<std::size_t>(i)];
        const SkellamParams params(lambda, lambda);
        const double nu = static_cast<double>(n);
        const double x = 2.0 * lambda;
        const double pmf = std::exp(skellam_log_pmf(params, n));
        const double h = hazard_sum_oracle(EvalPoint(nu, x)).value;
        Samples out{{nu, x, "pmf_bounds", skellam_pmf_bounds(params, n), pmf},
                    {nu, x, "pmf_bounds_negative", skellam_pmf_bounds(params, -n), pmf},
                    {nu, x, "hazard_function", skellam_hazard_bounds(nu, lambda), 1.0 / (h + 1.0)}};
        out.push_back({nu, x, "concentration", concentration_bounds(n, lambda).interval,
                       skellam_tail_oracle(params, n)});
        return out;
    });

    run.check("gaussian_tail", 101, [](std::int64_t i) {
        const double t = static_cast<double>(i) * 0.1;
        return Samples{{0.0, t, "gaussian_tail", gaussian_tail_bounds(t),
                        0.5 * std::sqrt(std::numbers::pi) * std::erfc(t)}};
    });

    return report;
}

}  // namespace besselbounds::cli
