#include <doctest.h>

#include <cmath>
#include <numbers>

#include "besselbounds/hazard_bounds.hpp"
#include "besselbounds/skellam.hpp"
#include "besselbounds/special_core.hpp"

using namespace besselbounds;

namespace {

// P[N1 - N2 = n] by direct convolution of two Poisson laws; an independent
// route to the mass function for moderate rates.
double convolution_pmf(double l1, double l2, std::int64_t n) {
    double sum = 0.0;
    const std::int64_t k0 = n < 0 ? -n : 0;
    for (std::int64_t k = k0; k < k0 + 400; ++k) {
        const auto a = static_cast<double>(k + n);
        const auto b = static_cast<double>(k);
        sum += std::exp(a * std::log(l1) - l1 - std::lgamma(a + 1.0) + b * std::log(l2) - l2 -
                        std::lgamma(b + 1.0));
    }
    return sum;
}

}  // namespace

TEST_CASE("skellam_log_pmf against the scaled Bessel value and convolution") {
    // lambda1 = lambda2 = 1, n = 0: exp(-2) I_0(2).
    CHECK(std::exp(skellam_log_pmf(SkellamParams(1.0, 1.0), 0)) ==
          doctest::Approx(0.30850832255367103953).epsilon(1e-14));

    for (double l1 : {0.5, 4.0, 12.0}) {
        for (double l2 : {0.5, 9.0, 20.0}) {
            for (std::int64_t n = -15; n <= 15; ++n) {
                CAPTURE(l1);
                CAPTURE(l2);
                CAPTURE(n);
                const double want = convolution_pmf(l1, l2, n);
                CHECK(std::exp(skellam_log_pmf(SkellamParams(l1, l2), n)) ==
                      doctest::Approx(want).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("skellam_log_pmf symmetry") {
    const SkellamParams p(7.0, 7.0);
    for (std::int64_t n = 0; n <= 30; ++n) {
        CHECK(skellam_log_pmf(p, n) == skellam_log_pmf(p, -n));
    }
    // Swapping the rates mirrors the law.
    CHECK(skellam_log_pmf(SkellamParams(3.0, 8.0), 4) ==
          doctest::Approx(skellam_log_pmf(SkellamParams(8.0, 3.0), -4)).epsilon(1e-14));
}

TEST_CASE("skellam mass sums to one") {
    for (double lambda : {1.0, 25.0, 100.0}) {
        const SkellamParams p(lambda, lambda);
        double total = std::exp(skellam_log_pmf(p, 0));
        for (std::int64_t n = 1; n <= 2000; ++n) total += 2.0 * std::exp(skellam_log_pmf(p, n));
        CHECK(std::fabs(total - 1.0) <= 1e-10);
    }
}

TEST_CASE("skellam_log_pmf stays finite at extreme rates") {
    const SkellamParams big(1e6, 1e6);
    CHECK(std::isfinite(skellam_log_pmf(big, 0)));
    CHECK(std::isfinite(skellam_log_pmf(big, 1000000)));
    CHECK(std::isfinite(skellam_log_pmf(big, -1000000)));
    CHECK(std::isfinite(skellam_log_pmf(SkellamParams(1e6, 2.0), 1000000)));
    // Near the mode the mass is about 1 / sqrt(4 pi lambda).
    CHECK(std::exp(skellam_log_pmf(big, 0)) ==
          doctest::Approx(1.0 / std::sqrt(4.0 * std::numbers::pi * 1e6)).epsilon(1e-5));
}

TEST_CASE("scaled_bessel_bounds_int examples") {
    // nu = 0 reduces to 1 / (1 + 2 H(0, x)) with H bracketed by [L, U].
    const ScaledBesselBounds zero = scaled_bessel_bounds_int(0, 100.0);
    const EvalPoint origin(0.0, 100.0);
    CHECK(zero.interval.lower == doctest::Approx(1.0 / (1.0 + 2.0 * upper_h_bound(origin))).epsilon(1e-14));
    CHECK(zero.interval.upper == doctest::Approx(1.0 / (1.0 + 2.0 * lower_h_bound(origin))).epsilon(1e-14));
    CHECK(zero.interval.contains(0.039944379299096682648));
    CHECK_FALSE(zero.geometric_fallback);
    CHECK(zero.regime == ScaledBesselRegime::OrderWithinArgument);

    const ScaledBesselBounds beyond = scaled_bessel_bounds_int(10, 4.0);
    CHECK(beyond.regime == ScaledBesselRegime::OrderBeyondArgument);
    CHECK(beyond.interval.contains(7.3956528029211121259e-6));
}

TEST_CASE("scaled_bessel_bounds_int contains the oracle on integer sweeps") {
    for (double x : {2.0, 3.7, 10.0, 50.0, 100.0}) {
        for (std::int64_t nu = 0; nu <= static_cast<std::int64_t>(2.0 * x) + 3; ++nu) {
            CAPTURE(x);
            CAPTURE(nu);
            const double v = scaled_bessel_i(EvalPoint(static_cast<double>(nu), x)).scaled.value;
            const ScaledBesselBounds b = scaled_bessel_bounds_int(nu, x);
            CHECK(b.interval.contains(v, 1e-9));
            CHECK(b.interval.lower <= b.interval.upper);
        }
    }
}

TEST_CASE("scaled_bessel_bounds_int below [x] = 2") {
    const ScaledBesselBounds b = scaled_bessel_bounds_int(0, 1.5);
    CHECK(b.geometric_fallback);
    CHECK(b.interval.contains(scaled_bessel_i(EvalPoint(0.0, 1.5)).scaled.value));
    CHECK_THROWS_AS(scaled_bessel_bounds_int(0, 1.5, false), RegimeError);

    const ScaledBesselBounds at0 = scaled_bessel_bounds_int(0, 0.0);
    CHECK(at0.interval.lower == 1.0);
    CHECK(at0.interval.upper == 1.0);
    CHECK(scaled_bessel_bounds_int(2, 0.0).interval.upper == 0.0);
    CHECK_THROWS_AS(scaled_bessel_bounds_int(-1, 5.0), DomainError);
}

TEST_CASE("skellam_pmf_bounds") {
    const SkellamParams asym(4.0, 9.0);
    for (std::int64_t n = -12; n <= 12; ++n) {
        CAPTURE(n);
        CHECK(skellam_pmf_bounds(asym, n).contains(convolution_pmf(4.0, 9.0, n), 1e-9));
    }
    const SkellamParams sym(25.0, 25.0);
    CHECK(skellam_pmf_bounds(sym, 0).contains(std::exp(skellam_log_pmf(sym, 0))));
    for (std::int64_t n = 1; n <= 60; ++n) {
        const Interval a = skellam_pmf_bounds(sym, n);
        const Interval b = skellam_pmf_bounds(sym, -n);
        CHECK(a.lower == b.lower);
        CHECK(a.upper == b.upper);
    }
}

TEST_CASE("skellam_hazard_bounds") {
    const Interval iv = skellam_hazard_bounds(0.0, 25.0);
    CHECK(iv.contains(1.0 / (hazard_sum_oracle(EvalPoint(0.0, 50.0)).value + 1.0)));
    CHECK(iv.lower > 0.0);
    CHECK(iv.upper <= 1.0);

    const Interval tiny = skellam_hazard_bounds(3.0, 1e-9);
    CHECK(tiny.lower == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(tiny.upper <= 1.0);
    CHECK_THROWS_AS(skellam_hazard_bounds(0.0, 0.0), DomainError);
}

TEST_CASE("P[W = 0] equals 1 / (2 H(0, 2 lambda) + 1)") {
    for (double lambda : {1.0, 5.0, 25.0, 100.0}) {
        const double p0 = std::exp(skellam_log_pmf(SkellamParams(lambda, lambda), 0));
        const double h = hazard_sum_oracle(EvalPoint(0.0, 2.0 * lambda)).value;
        CHECK(p0 == doctest::Approx(1.0 / (2.0 * h + 1.0)).epsilon(1e-9));
    }
}

TEST_CASE("concentration_bounds") {
    const SkellamParams p(25.0, 25.0);
    for (std::int64_t nu : {0, 40, 80}) {
        CAPTURE(nu);
        const ConcentrationReport r = concentration_bounds(nu, 25.0);
        CHECK(r.interval.contains(skellam_tail_oracle(p, nu), 1e-9));
        CHECK(r.interval.lower >= 0.0);
        CHECK(r.interval.upper <= 1.0);
        CHECK(r.h_interval.contains(hazard_sum_oracle(EvalPoint(static_cast<double>(nu), 50.0)).value));
    }
    CHECK(concentration_bounds(0, 25.0).upper_clamped);
    CHECK(scaled_bessel_bounds_int(80, 50.0).regime == ScaledBesselRegime::OrderBeyondArgument);
    CHECK_THROWS_AS(concentration_bounds(0, 0.9), RegimeError);
    CHECK_THROWS_AS(concentration_bounds(-1, 5.0), DomainError);
}
