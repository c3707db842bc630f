#include "besselbounds/types.hpp"

namespace besselbounds {

void require_nonnegative(double value, const char* what) {
    if (!std::isfinite(value) || value < 0.0) {
        throw DomainError(std::string(what) + " must be finite and >= 0, got " +
                          std::to_string(value));
    }
}

void require_positive(double value, const char* what) {
    if (!std::isfinite(value) || value <= 0.0) {
        throw DomainError(std::string(what) + " must be finite and > 0, got " +
                          std::to_string(value));
    }
}

EvalPoint::EvalPoint(double nu, double x) : nu_(nu), x_(x) {
    require_nonnegative(nu, "nu");
    require_nonnegative(x, "x");
    constexpr double kMaxExact = 9.0e15;
    if (nu > kMaxExact || x > kMaxExact) {
        throw DomainError("EvalPoint: argument too large for an exact integer floor");
    }
    const double nf = std::floor(nu);
    const double xf = std::floor(x);
    nu_floor_ = static_cast<std::int64_t>(nf);
    nu_frac_ = nu - nf;
    x_floor_ = static_cast<std::int64_t>(xf);
    x_frac_ = x - xf;
}

SkellamParams::SkellamParams(double lambda1, double lambda2)
    : lambda1_(lambda1), lambda2_(lambda2) {
    require_positive(lambda1, "lambda1");
    require_positive(lambda2, "lambda2");
}

double SkellamParams::x() const {
    return lambda1_ == lambda2_ ? 2.0 * lambda1_ : 2.0 * std::sqrt(lambda1_ * lambda2_);
}

}  // namespace besselbounds
