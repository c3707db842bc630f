#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace besselbounds {

// Argument outside the mathematical domain of an operation (negative order,
// NaN, wrong regime, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A bound was requested outside the regime its derivation covers, e.g. the
// exponential ratio bounds with nu + 1 > x.
class RegimeError : public DomainError {
public:
    using DomainError::DomainError;
};

// An iterative evaluation hit its iteration cap before meeting the requested
// tolerance.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An (order, argument) pair together with its floor/fractional split.
//
// Floors are taken with the standard convention: at exact integers the
// fractional part is exactly zero.
class EvalPoint {
public:
    EvalPoint(double nu, double x);

    double nu() const { return nu_; }
    double x() const { return x_; }
    std::int64_t nu_floor() const { return nu_floor_; }
    double nu_frac() const { return nu_frac_; }
    std::int64_t x_floor() const { return x_floor_; }
    double x_frac() const { return x_frac_; }

private:
    double nu_;
    double x_;
    std::int64_t nu_floor_;
    double nu_frac_;
    std::int64_t x_floor_;
    double x_frac_;
};

// Closed interval [lower, upper].
struct Interval {
    double lower = 0.0;
    double upper = 0.0;

    double width() const { return upper - lower; }

    // True when value lies in the interval widened by rel_slack * |value| on
    // both sides (the slack absorbs the oracle's own error).
    bool contains(double value, double rel_slack = 0.0) const {
        const double pad = rel_slack * std::fabs(value);
        return lower - pad <= value && value <= upper + pad;
    }
};

// Term count and a bound on what a truncated infinite sum discarded.
//
// tail_bound is relative: (discarded mass) / (accumulated partial sum).
// On a successful return tail_bound <= requested_tol.
struct TruncationCertificate {
    std::int64_t terms_used = 0;
    double tail_bound = 0.0;
    double requested_tol = 0.0;
};

// Rates of a Skellam(lambda1, lambda2) law, the difference of two independent
// Poisson variables.
class SkellamParams {
public:
    SkellamParams(double lambda1, double lambda2);

    double lambda1() const { return lambda1_; }
    double lambda2() const { return lambda2_; }
    // Bessel argument 2 sqrt(lambda1 lambda2).
    double x() const;
    bool symmetric() const { return lambda1_ == lambda2_; }

private:
    double lambda1_;
    double lambda2_;
};

void require_nonnegative(double value, const char* what);
void require_positive(double value, const char* what);

}  // namespace besselbounds
