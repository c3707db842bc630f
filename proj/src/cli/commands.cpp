#include "besselbounds/cli/commands.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "besselbounds/cli/parallel.hpp"
#include "besselbounds/cli/verify.hpp"
#include "besselbounds/hazard_bounds.hpp"
#include "besselbounds/ratio_bounds.hpp"
#include "besselbounds/skellam.hpp"
#include "besselbounds/special_core.hpp"

namespace besselbounds::cli {

namespace {

Cell optional_cell(const std::optional<double>& v) {
    return v ? Cell{*v} : Cell{};
}

// Options shared by the point/grid subcommands.
struct PointOptions {
    std::optional<double> nu;
    std::optional<double> x;
    std::optional<std::string> grid;
    std::string vary = "nu";
    std::optional<int> figure;
    double tol = 0.0;
    std::optional<double> eps;
    std::optional<std::string> out_path;
};

struct SkellamOptions {
    std::optional<double> l1;
    std::optional<double> l2;
    std::optional<double> lambda;
    std::optional<std::int64_t> n;
    std::optional<std::string> grid;
    double tol = kDefaultHazardTol;
    std::optional<std::string> out_path;
};

struct VerifyCliOptions {
    std::string preset = "quick";
    double slack = 1e-9;
    double perturb = 1.0;
    std::optional<std::string> grid;
    std::optional<std::string> report_path;
};

void emit(const std::optional<std::string>& path, std::ostream& out, const std::string& header,
          const std::vector<std::string>& rows) {
    std::ofstream file;
    std::ostream* sink = &out;
    if (path) {
        file.open(*path, std::ios::binary | std::ios::trunc);
        if (!file) throw UsageError("cannot open output file '" + *path + "'");
        sink = &file;
    }
    *sink << header;
    for (const std::string& row : rows) *sink << row;
    sink->flush();
}

// Points for ratio/hsum: a figure preset, an explicit grid, or a single point.
std::vector<EvalPoint> collect_points(const PointOptions& o, int figure_id) {
    std::optional<GridSpec> grid;
    if (o.figure) {
        if (*o.figure != figure_id) {
            throw UsageError("--figure " + std::to_string(*o.figure) +
                             " is not available for this command");
        }
        grid = figure_grid(figure_id);
    }
    if (o.grid) {
        GridVar var = GridVar::Nu;
        if (o.vary == "x") {
            var = GridVar::X;
        } else if (o.vary != "nu") {
            throw UsageError("--vary must be 'nu' or 'x'");
        }
        double fixed = 0.0;
        if (var == GridVar::Nu) {
            if (!o.x && !grid) throw UsageError("--grid over nu needs --x");
            fixed = o.x ? *o.x : grid->fixed_other;
        } else {
            fixed = o.nu.value_or(0.0);
        }
        grid = GridSpec::parse(*o.grid, var, fixed);
    }

    std::vector<EvalPoint> points;
    if (grid) {
        points.reserve(static_cast<std::size_t>(grid->count()));
        for (std::int64_t i = 0; i < grid->count(); ++i) {
            const double v = grid->at(i);
            points.push_back(grid->var == GridVar::Nu ? EvalPoint(v, grid->fixed_other)
                                                      : EvalPoint(grid->fixed_other, v));
        }
        return points;
    }
    if (!o.x) throw UsageError("need --x (with optional --nu), --grid, or --figure");
    points.emplace_back(o.nu.value_or(0.0), *o.x);
    return points;
}

std::vector<std::string> render(std::int64_t n, const std::function<std::vector<Cell>(std::int64_t)>& fn) {
    return parallel_map(n, [&](std::int64_t i) { return csv_row(fn(i)); });
}

int cmd_ratio(const PointOptions& o, std::ostream& out) {
    const auto points = collect_points(o, 1);
    const double tol = o.tol > 0.0 ? o.tol : kDefaultRatioTol;
    const auto rows = render(static_cast<std::int64_t>(points.size()), [&](std::int64_t i) {
        return ratio_row(points[static_cast<std::size_t>(i)], tol);
    });
    emit(o.out_path, out, csv_header(ratio_columns()), rows);
    return kExitOk;
}

int cmd_hsum(const PointOptions& o, std::ostream& out) {
    const auto points = collect_points(o, 2);
    double eps = o.figure ? kFigure2Eps : kDefaultHazardTol;
    if (o.eps) eps = *o.eps;
    if (!(eps > 0.0)) throw UsageError("--eps must be > 0");
    const auto rows = render(static_cast<std::int64_t>(points.size()), [&](std::int64_t i) {
        return hsum_row(points[static_cast<std::size_t>(i)], eps);
    });
    emit(o.out_path, out, csv_header(hsum_columns()), rows);
    return kExitOk;
}

int cmd_scaled_bessel(const PointOptions& o, std::ostream& out) {
    std::optional<GridSpec> grid;
    if (o.figure) {
        if (*o.figure != 3) throw UsageError("--figure " + std::to_string(*o.figure) +
                                             " is not available for this command");
        grid = figure_grid(3);
    }
    if (o.grid) grid = GridSpec::parse(*o.grid, GridVar::X, 0.0);
    std::vector<double> xs;
    if (grid) {
        for (std::int64_t i = 0; i < grid->count(); ++i) xs.push_back(grid->at(i));
    } else if (o.x) {
        xs.push_back(*o.x);
    } else {
        throw UsageError("need --x, --grid, or --figure 3");
    }
    const double tol = o.tol > 0.0 ? o.tol : kDefaultSeriesTol;
    const auto rows = render(static_cast<std::int64_t>(xs.size()), [&](std::int64_t i) {
        return scaled_bessel_row(xs[static_cast<std::size_t>(i)], tol);
    });
    emit(o.out_path, out, csv_header(scaled_bessel_columns()), rows);
    return kExitOk;
}

std::vector<std::int64_t> integer_values(const SkellamOptions& o, const char* name) {
    std::vector<std::int64_t> values;
    if (o.grid) {
        const GridSpec g = GridSpec::parse(*o.grid, GridVar::Nu, 0.0);
        for (std::int64_t i = 0; i < g.count(); ++i) {
            const double v = g.at(i);
            if (std::floor(v) != v) throw UsageError(std::string("--grid must produce integer ") + name);
            values.push_back(static_cast<std::int64_t>(v));
        }
    } else if (o.n) {
        values.push_back(*o.n);
    } else {
        throw UsageError(std::string("need --n/--nu or --grid for ") + name);
    }
    return values;
}

SkellamParams rates_from(const SkellamOptions& o) {
    if (o.lambda && !o.l1 && !o.l2) {
        if (!(*o.lambda > 0.0)) throw UsageError("--lambda must be > 0");
        return SkellamParams(*o.lambda, *o.lambda);
    }
    if (!o.l1 || !o.l2) throw UsageError("need --l1 and --l2, or --lambda");
    if (!(*o.l1 > 0.0) || !(*o.l2 > 0.0)) throw UsageError("rates must be > 0");
    return SkellamParams(*o.l1, *o.l2);
}

double lambda_from(const SkellamOptions& o) {
    if (!o.lambda) throw UsageError("need --lambda");
    if (!(*o.lambda > 0.0)) throw UsageError("--lambda must be > 0");
    return *o.lambda;
}

int cmd_skellam(const std::string& which, const SkellamOptions& o, std::ostream& out) {
    std::vector<std::string> columns;
    std::function<std::vector<Cell>(std::int64_t)> row;
    std::vector<std::int64_t> ns;

    if (which == "pmf") {
        const SkellamParams params = rates_from(o);
        ns = integer_values(o, "n");
        columns = {"l1", "l2", "n", "log_pmf", "pmf"};
        row = [=](std::int64_t n) {
            const double lp = skellam_log_pmf(params, n);
            return std::vector<Cell>{params.lambda1(), params.lambda2(), n, lp, std::exp(lp)};
        };
    } else if (which == "pmf-bounds") {
        const SkellamParams params = rates_from(o);
        ns = integer_values(o, "n");
        columns = {"l1", "l2", "n", "lower", "upper", "oracle", "fallback_flag"};
        row = [=](std::int64_t n) {
            const Interval b = skellam_pmf_bounds(params, n);
            const bool fallback = std::floor(params.x()) < 2.0;
            return std::vector<Cell>{params.lambda1(), params.lambda2(), n, b.lower, b.upper,
                                     std::exp(skellam_log_pmf(params, n)),
                                     std::int64_t{fallback ? 1 : 0}};
        };
    } else if (which == "tail") {
        const double lambda = lambda_from(o);
        ns = integer_values(o, "n");
        const double tol = o.tol;
        columns = {"lambda", "n", "oracle"};
        row = [=](std::int64_t n) {
            return std::vector<Cell>{lambda, n,
                                     skellam_tail_oracle(SkellamParams(lambda, lambda), n, tol)};
        };
    } else if (which == "concentration") {
        const double lambda = lambda_from(o);
        ns = integer_values(o, "nu");
        const double tol = o.tol;
        columns = {"lambda", "nu", "lower", "upper", "h_lower", "h_upper",
                   "scaled_lower", "scaled_upper", "oracle", "upper_clamped"};
        row = [=](std::int64_t nu) {
            const ConcentrationReport r = concentration_bounds(nu, lambda);
            return std::vector<Cell>{lambda, nu, r.interval.lower, r.interval.upper,
                                     r.h_interval.lower, r.h_interval.upper,
                                     r.scaled_bessel_interval.lower, r.scaled_bessel_interval.upper,
                                     skellam_tail_oracle(SkellamParams(lambda, lambda), nu, tol),
                                     std::int64_t{r.upper_clamped ? 1 : 0}};
        };
    } else {  // hazard
        const double lambda = lambda_from(o);
        ns = integer_values(o, "nu");
        const double tol = o.tol;
        columns = {"lambda", "nu", "lower", "upper", "oracle"};
        row = [=](std::int64_t nu) {
            const double v = static_cast<double>(nu);
            const Interval b = skellam_hazard_bounds(v, lambda);
            const double h = hazard_sum_oracle(EvalPoint(v, 2.0 * lambda), tol).value;
            return std::vector<Cell>{lambda, nu, b.lower, b.upper, 1.0 / (h + 1.0)};
        };
    }

    const auto rows = render(static_cast<std::int64_t>(ns.size()), [&](std::int64_t i) {
        return row(ns[static_cast<std::size_t>(i)]);
    });
    emit(o.out_path, out, csv_header(columns), rows);
    return kExitOk;
}

int cmd_verify(const VerifyCliOptions& o, std::ostream& out) {
    VerifyOptions options;
    if (o.preset == "quick") {
        options.preset = VerifyPreset::Quick;
    } else if (o.preset == "full") {
        options.preset = VerifyPreset::Full;
    } else {
        throw UsageError("--preset must be 'quick' or 'full'");
    }
    if (!(o.slack >= 0.0)) throw UsageError("--tol must be >= 0");
    if (!(o.perturb > 0.0)) throw UsageError("--perturb must be > 0");
    options.slack = o.slack;
    options.perturb = o.perturb;
    if (o.grid) options.nu_grid = GridSpec::parse(*o.grid, GridVar::Nu, 0.0);

    const SweepReport report = run_verification(options);
    if (o.report_path) {
        std::ofstream file(*o.report_path, std::ios::binary | std::ios::trunc);
        if (!file) throw UsageError("cannot open report file '" + *o.report_path + "'");
        file << report.to_json() << '\n';
    }
    for (const CheckSummary& c : report.checks) {
        out << (c.violations == 0 ? "PASS " : "FAIL ") << c.name << ": " << c.points
            << " points, " << c.violations << " violations\n";
    }
    out << "total: " << report.points_checked << " points, " << report.violations.size()
        << " stored violations, max relative slack " << format_real(report.max_relative_slack)
        << '\n';
    return report.passed() ? kExitOk : kExitVerifyFailed;
}

void add_point_options(CLI::App* cmd, PointOptions& o, bool with_eps) {
    cmd->add_option("--nu", o.nu, "Order nu >= 0");
    cmd->add_option("--x", o.x, "Argument x >= 0");
    cmd->add_option("--grid", o.grid, "start:stop:step over the --vary variable");
    cmd->add_option("--vary", o.vary, "Grid variable: nu or x")->check(CLI::IsMember({"nu", "x"}));
    cmd->add_option("--tol", o.tol, "Oracle tolerance");
    cmd->add_option("--out", o.out_path, "Write CSV to this path instead of stdout");
    if (with_eps) cmd->add_option("--eps", o.eps, "Truncation tolerance of the H oracle");
}

}  // namespace

GridSpec figure_grid(int figure) {
    switch (figure) {
        case 1: return GridSpec{GridVar::Nu, 0.0, 150.0, 0.015, 100.0};
        case 2: return GridSpec{GridVar::Nu, 0.0, 200.0, 0.01, 50.0};
        case 3: return GridSpec{GridVar::X, 0.0, 100.0, 0.01, 0.0};
        default: throw UsageError("--figure must be 1, 2 or 3");
    }
}

std::vector<std::string> ratio_columns() {
    return {"nu", "x", "amos_lower", "amos_upper", "exp_lower", "exp_upper", "oracle"};
}

std::vector<Cell> ratio_row(const EvalPoint& p, double tol) {
    const Interval amos = amos_ratio_bounds(p);
    std::optional<double> exp_lower;
    std::optional<double> exp_upper;
    if (ratio_branch(p) == RatioBranch::Exponential) {
        const Interval e = exp_ratio_bounds(p);
        exp_lower = e.lower;
        exp_upper = e.upper;
    }
    return {p.nu(), p.x(), amos.lower, amos.upper, optional_cell(exp_lower),
            optional_cell(exp_upper), bessel_ratio(p, tol).value};
}

std::vector<std::string> hsum_columns() {
    return {"nu", "x", "regime", "geo_lower", "geo_upper", "L", "U", "oracle", "oracle_tail_bound"};
}

std::vector<Cell> hsum_row(const EvalPoint& p, double eps) {
    const HazardBoundReport r = h_bounds(p);
    const HazardSum h = hazard_sum_oracle(p, eps);
    std::optional<double> lower;
    std::optional<double> upper;
    if (r.two_regime) {
        lower = r.two_regime->lower;
        upper = r.two_regime->upper;
    }
    const char* regime = r.regime == HazardRegime::TwoRegime ? "two_regime" : "geometric";
    return {p.nu(), p.x(), std::string(regime), r.geometric.lower, r.geometric.upper,
            optional_cell(lower), optional_cell(upper), h.value, h.certificate.tail_bound};
}

std::vector<std::string> scaled_bessel_columns() {
    return {"x", "oracle", "asymptotic", "lower", "upper", "fallback_flag"};
}

std::vector<Cell> scaled_bessel_row(double x, double tol) {
    const double oracle = scaled_bessel_i(EvalPoint(0.0, x), tol).scaled.value;
    std::optional<double> asymptotic;
    if (x > 0.0) asymptotic = 1.0 / std::sqrt(2.0 * std::numbers::pi * x);
    const ScaledBesselBounds b = scaled_bessel_bounds_int(0, x);
    return {x, oracle, optional_cell(asymptotic), b.interval.lower, b.interval.upper,
            std::int64_t{b.geometric_fallback ? 1 : 0}};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bounds and reference values for modified Bessel ratios, H(nu, x) and Skellam laws",
                 "besselbounds"};
    app.require_subcommand(0, 1);

    std::optional<int> top_figure;
    app.add_option("--figure", top_figure, "Shortcut for the figure presets (1, 2 or 3)");
    std::optional<std::string> top_out;
    app.add_option("--out", top_out, "Output path for --figure");

    PointOptions ratio_opts;
    auto* ratio = app.add_subcommand("ratio", "Ratio I_{nu+1}/I_nu: Amos and exponential bounds");
    add_point_options(ratio, ratio_opts, false);
    ratio->add_option("--figure", ratio_opts.figure, "Figure preset (1)");

    PointOptions hsum_opts;
    auto* hsum = app.add_subcommand("hsum", "H(nu, x): geometric and two-regime bounds");
    add_point_options(hsum, hsum_opts, true);
    hsum->add_option("--figure", hsum_opts.figure, "Figure preset (2)");

    PointOptions sb_opts;
    auto* sb = app.add_subcommand("scaled-bessel", "exp(-x) I_0(x) and its bounds");
    add_point_options(sb, sb_opts, false);
    sb->add_option("--figure", sb_opts.figure, "Figure preset (3)");

    SkellamOptions sk_opts;
    auto* skellam = app.add_subcommand("skellam", "Skellam mass, tail, hazard and concentration");
    skellam->require_subcommand(1);
    std::string skellam_which;
    for (const char* name : {"pmf", "pmf-bounds", "tail", "concentration", "hazard"}) {
        auto* sub = skellam->add_subcommand(name);
        sub->add_option("--l1", sk_opts.l1, "Rate lambda1");
        sub->add_option("--l2", sk_opts.l2, "Rate lambda2");
        sub->add_option("--lambda", sk_opts.lambda, "Common rate lambda");
        sub->add_option("--n,--nu", sk_opts.n, "Integer value");
        sub->add_option("--grid", sk_opts.grid, "start:stop:step over integer values");
        sub->add_option("--tol", sk_opts.tol, "Oracle tolerance");
        sub->add_option("--out", sk_opts.out_path, "Write CSV to this path");
        sub->callback([&skellam_which, name] { skellam_which = name; });
    }

    VerifyCliOptions verify_opts;
    auto* verify = app.add_subcommand("verify", "Run every bound-versus-oracle sweep");
    verify->add_option("--preset", verify_opts.preset, "quick or full");
    verify->add_option("--tol", verify_opts.slack, "Relative slack granted to the oracle");
    verify->add_option("--grid", verify_opts.grid, "Override nu values of the ratio/H sweeps");
    verify->add_option("--report", verify_opts.report_path, "Write a JSON report here");
    verify->add_option("--perturb", verify_opts.perturb, "Scale bound upper ends (test hook)")
        ->group("");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        try {
            app.parse(static_cast<int>(argv.size()), argv.data());
        } catch (const CLI::CallForHelp&) {
            out << app.help();
            return kExitOk;
        } catch (const CLI::CallForAllHelp&) {
            out << app.help("", CLI::AppFormatMode::All);
            return kExitOk;
        } catch (const CLI::ParseError& e) {
            err << "error: " << e.what() << '\n';
            return kExitUsage;
        }

        if (*ratio) return cmd_ratio(ratio_opts, out);
        if (*hsum) return cmd_hsum(hsum_opts, out);
        if (*sb) return cmd_scaled_bessel(sb_opts, out);
        if (*skellam) return cmd_skellam(skellam_which, sk_opts, out);
        if (*verify) return cmd_verify(verify_opts, out);
        if (top_figure) {
            PointOptions o;
            o.figure = top_figure;
            o.out_path = top_out;
            switch (*top_figure) {
                case 1: return cmd_ratio(o, out);
                case 2: return cmd_hsum(o, out);
                case 3: return cmd_scaled_bessel(o, out);
                default: throw UsageError("--figure must be 1, 2 or 3");
            }
        }
        out << app.help();
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ConvergenceError& e) {
        err << "error: " << e.what() << '\n';
        return kExitNonConvergence;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace besselbounds::cli
