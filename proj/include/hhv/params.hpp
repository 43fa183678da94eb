#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace hhv {

// Minimum distance of lambda above 2 - min(p,q). Closer than this the tail
// exponents sit too near 1 for the brackets to mean anything.
inline constexpr double kMinAdmissibilityMargin = 1e-6;

// Conjugate pair (p, q), kernel exponent lambda, and the derived constant
// k_lambda = lambda p q / ((p + lambda - 2)(q + lambda - 2)).
//
// Admissible iff p > 1 and 2 - min(p,q) < lambda <= 2; q is always derived
// from p, so 1/p + 1/q = 1 holds by construction.
class HolderParams {
public:
    HolderParams(double p, double lambda) : p_(p), lambda_(lambda) {
        if (!std::isfinite(p) || !(p > 1.0))
            throw std::invalid_argument("HolderParams: p must be finite and > 1");
        if (!std::isfinite(lambda))
            throw std::invalid_argument("HolderParams: lambda must be finite");
        q_ = p_ / (p_ - 1.0);

        const double conj = 1.0 / p_ + 1.0 / q_ - 1.0;
        if (std::fabs(conj) > 4.0 * std::numeric_limits<double>::epsilon())
            throw std::logic_error("HolderParams: conjugacy drift beyond 4 ulps");

        const double floor = 2.0 - std::fmin(p_, q_);
        if (!(lambda_ <= 2.0) || !(lambda_ - floor >= kMinAdmissibilityMargin))
            throw std::invalid_argument(
                "HolderParams: need 2 - min(p,q) < lambda <= 2 (margin >= 1e-6); got p=" +
                std::to_string(p) + ", lambda=" + std::to_string(lambda));

        k_lambda_ = lambda_ * p_ * q_ / ((p_ + lambda_ - 2.0) * (q_ + lambda_ - 2.0));
        if (!(k_lambda_ > 0.0))
            throw std::invalid_argument("HolderParams: k_lambda must be positive");

        // Equivalent to the lambda condition, asserted independently.
        if (!(tail_exponent() > 1.0) || !(tail_exponent_dual() > 1.0))
            throw std::invalid_argument("HolderParams: tail exponent must exceed 1");
    }

    double p() const { return p_; }
    double q() const { return q_; }
    double lambda() const { return lambda_; }
    double k_lambda() const { return k_lambda_; }

    // Exponent of the tail series behind the primal/dual weight estimates.
    double tail_exponent() const { return 2.0 / p_ + lambda_ / q_; }
    double tail_exponent_dual() const { return 2.0 / q_ + lambda_ / p_; }

    HolderParams swapped() const { return HolderParams(q_, lambda_); }

private:
    double p_;
    double q_;
    double lambda_;
    double k_lambda_;
};

} // namespace hhv
