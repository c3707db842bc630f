#include "besselbounds/special_core.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace besselbounds {

namespace {

using ext = long double;

constexpr std::int64_t kSeriesIterationCap = 50'000'000;
constexpr std::int64_t kHazardIterationCap = 10'000'000;

ext log_gamma_ext(ext z) {
#if defined(__GLIBC__)
    int sign = 0;
    return ::lgammal_r(z, &sign);
#else
    return std::lgamma(z);
#endif
}

void require_tol(double tol) {
    if (!(tol > 0.0) || !std::isfinite(tol)) {
        throw DomainError("tolerance must be finite and > 0, got " + std::to_string(tol));
    }
}

// x / (a + sqrt(a^2 + x^2)), the upper ratio bound at order a - 1/2.
double upper_ratio_kernel(double a, double x) {
    return x / (a + std::hypot(a, x));
}

}  // namespace

ScaledBesselResult scaled_bessel_i(const EvalPoint& p, double tol) {
    require_tol(tol);
    const double nu = p.nu();
    const double x = p.x();

    ScaledBesselResult out;
    out.certificate.requested_tol = tol;
    if (x == 0.0) {
        out.scaled.value = nu == 0.0 ? 1.0 : 0.0;
        out.scaled.log_value = nu == 0.0 ? 0.0 : -std::numeric_limits<double>::infinity();
        return out;
    }

    const ext n = nu;
    const ext half = static_cast<ext>(x) / 2;
    const ext q = half * half;

    // Terms t_k = (x/2)^(2k+nu) / (k! Gamma(k+nu+1)) peak where
    // (k+1)(k+nu+1) = (x/2)^2.
    const ext peak = (std::sqrt(n * n + static_cast<ext>(x) * x) - (n + 2)) / 2;
    const ext k0 = peak > 0 ? std::floor(peak) : ext{0};
    const ext log_t0 =
        (2 * k0 + n) * std::log(half) - log_gamma_ext(k0 + 1) - log_gamma_ext(k0 + n + 1) - x;

    // Sum of t_k / t_{k0}; each direction certifies its own tail with half the
    // tolerance budget.
    const ext budget = static_cast<ext>(tol) / 2;
    ext sum = 1;
    std::int64_t terms = 1;
    ext up_tail = 0;
    ext down_tail = 0;

    {
        ext t = 1;
        ext k = k0;
        for (;;) {
            const ext r = q / ((k + 1) * (k + n + 1));
            t *= r;
            sum += t;
            k += 1;
            ++terms;
            // Ratios decrease with k, so the next one bounds all that follow.
            const ext r_next = q / ((k + 1) * (k + n + 1));
            if (r_next < 1) {
                up_tail = t * r_next / (1 - r_next);
                if (up_tail <= budget * sum) break;
            }
            if (terms > kSeriesIterationCap) {
                throw ConvergenceError("scaled_bessel_i: upward series walk did not converge");
            }
        }
    }
    {
        ext t = 1;
        ext k = k0;
        while (k > 0) {
            // t_{k-1} / t_k = k (k + nu) / (x/2)^2, decreasing as k decreases.
            const ext r = k * (k + n) / q;
            t *= r;
            sum += t;
            k -= 1;
            ++terms;
            if (k == 0) {
                down_tail = 0;
                break;
            }
            const ext r_next = k * (k + n) / q;
            if (r_next < 1) {
                down_tail = t * r_next / (1 - r_next);
                if (down_tail <= budget * sum) break;
            }
            if (terms > kSeriesIterationCap) {
                throw ConvergenceError("scaled_bessel_i: downward series walk did not converge");
            }
        }
    }

    const ext log_value = log_t0 + std::log(sum);
    out.scaled.log_value = static_cast<double>(log_value);
    out.scaled.value = static_cast<double>(std::exp(log_value));
    out.certificate.terms_used = terms;
    out.certificate.tail_bound = static_cast<double>((up_tail + down_tail) / sum);
    return out;
}

RatioValue bessel_ratio(const EvalPoint& p, double tol) {
    require_tol(tol);
    const double nu = p.nu();
    const double x = p.x();
    if (x == 0.0) return RatioValue{0.0};

    constexpr double tiny = 1e-300;
    // Modified Lentz with all partial numerators equal to 1 and
    // partial denominators b_j = 2 (nu + j) / x.
    double f = tiny;
    double c = f;
    double d = 0.0;
    for (std::int64_t j = 1; j <= kRatioIterationCap; ++j) {
        const double b = 2.0 * (nu + static_cast<double>(j)) / x;
        d = b + d;
        if (d == 0.0) d = tiny;
        c = b + 1.0 / c;
        if (c == 0.0) c = tiny;
        d = 1.0 / d;
        const double delta = c * d;
        f *= delta;
        if (std::fabs(delta - 1.0) < tol) {
            return RatioValue{f};
        }
    }
    throw ConvergenceError("bessel_ratio: continued fraction did not converge at nu=" +
                           std::to_string(nu) + ", x=" + std::to_string(x));
}

HazardSum hazard_sum_oracle(const EvalPoint& p, double tol) {
    require_tol(tol);
    const double nu = p.nu();
    const double x = p.x();

    HazardSum out;
    out.certificate.requested_tol = tol;
    if (x == 0.0) return out;

    const double ratio_tol = std::min(kDefaultRatioTol, tol);
    double product = 1.0;
    double sum = 0.0;
    for (std::int64_t n = 1; n <= kHazardIterationCap; ++n) {
        const double order = nu + static_cast<double>(n - 1);
        product *= bessel_ratio(EvalPoint(order, x), ratio_tol).value;
        sum += product;
        const double u = upper_ratio_kernel(nu + static_cast<double>(n) + 0.5, x);
        const double tail = product * u / (1.0 - u);
        if (tail <= tol * sum) {
            out.value = sum;
            out.certificate.terms_used = n;
            out.certificate.tail_bound = sum > 0.0 ? tail / sum : 0.0;
            return out;
        }
    }
    throw ConvergenceError("hazard_sum_oracle: truncation not certified within iteration cap");
}

double log_gamma(double z) {
    if (!(z > 0.0) || !std::isfinite(z)) {
        throw DomainError("log_gamma: z must be finite and > 0, got " + std::to_string(z));
    }
    if (z < 0.5) {
        // Gamma(z) = Gamma(z + 1) / z keeps the Lanczos sum in its accurate range.
        return log_gamma(z + 1.0) - std::log(z);
    }
    if (z == 1.0 || z == 2.0) return 0.0;

    static constexpr double g = 7.0;
    static constexpr std::array<double, 9> coeff = {
        0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
        771.32342877765313,      -176.61502916214059,   12.507343278686905,
        -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

    const double zm1 = z - 1.0;
    double a = coeff[0];
    for (std::size_t i = 1; i < coeff.size(); ++i) {
        a += coeff[i] / (zm1 + static_cast<double>(i));
    }
    const double t = zm1 + g + 0.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (zm1 + 0.5) * std::log(t) - t + std::log(a);
}

double log_beta(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
        throw DomainError("beta: arguments must be finite and > 0");
    }
    // B(1, b) = 1 / b exactly.
    if (a == 1.0) return -std::log(b);
    if (b == 1.0) return -std::log(a);
    return log_gamma(a) + log_gamma(b) - log_gamma(a + b);
}

double beta_fn(double a, double b) {
    if (a == 1.0 && b > 0.0 && std::isfinite(b)) return 1.0 / b;
    if (b == 1.0 && a > 0.0 && std::isfinite(a)) return 1.0 / a;
    return std::exp(log_beta(a, b));
}

Interval gaussian_tail_bounds(double t) {
    require_nonnegative(t, "t");
    const double e = std::exp(-t * t);
    return Interval{e / (t + std::sqrt(t * t + 2.0)),
                    e / (t + std::sqrt(t * t + 4.0 / std::numbers::pi))};
}

double skellam_tail_oracle(const SkellamParams& params, std::int64_t n, double tol) {
    require_tol(tol);
    if (!params.symmetric()) {
        throw DomainError("skellam_tail_oracle: only lambda1 == lambda2 is supported");
    }
    if (n < 0) throw DomainError("skellam_tail_oracle: n must be >= 0");
    const double x = params.x();
    const double series_tol = std::min(kDefaultSeriesTol, tol);

    // P[W = k] = exp(-x) I_k(x) for symmetric rates; the tail is two-sided.
    double sum = 0.0;
    for (std::int64_t k = n + 1; k <= n + kHazardIterationCap; ++k) {
        const double term =
            scaled_bessel_i(EvalPoint(static_cast<double>(k), x), series_tol).scaled.value;
        sum += term;
        const double u = upper_ratio_kernel(static_cast<double>(k) + 0.5, x);
        const double tail = term * u / (1.0 - u);
        if (tail <= tol * sum || term == 0.0) {
            return 2.0 * sum;
        }
    }
    throw ConvergenceError("skellam_tail_oracle: tail not certified within iteration cap");
}

}  // namespace besselbounds
