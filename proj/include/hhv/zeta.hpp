#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hhv/exact.hpp"
#include "hhv/interval.hpp"
#include "hhv/summation.hpp"

namespace hhv {

// Split point m and correction order l for the truncated-sum-plus-correction
// evaluation of zeta. The defaults give sub-1e-12 widths over the exponent
// range the weight estimates need.
struct EmSettings {
    int m = 16;
    int l = 8;
};

namespace detail {

inline constexpr int kMaxCorrectionOrder = 64;

// B_{2n}/(2n) as doubles, n = 1..kMaxCorrectionOrder, from the exact table.
inline const std::vector<double>& bernoulli_correction_coeffs() {
    static const std::vector<double> coeffs = [] {
        const BernoulliTable table = bernoulli_table(2 * kMaxCorrectionOrder);
        std::vector<double> c;
        c.reserve(kMaxCorrectionOrder);
        for (int n = 1; n <= kMaxCorrectionOrder; ++n)
            c.push_back(static_cast<double>(table.at(2 * n)) / (2.0 * n));
        return c;
    }();
    return coeffs;
}

inline void validate_em_settings(const EmSettings& s) {
    if (s.m < 1 || s.l < 1)
        throw std::invalid_argument("EmSettings: m and l must be >= 1");
    if (s.l > kMaxCorrectionOrder)
        throw std::invalid_argument("EmSettings: correction order capped at 64");
}

} // namespace detail

// Evaluate zeta(rho) for rho >= 0, rho != 1 as a bracket:
//
//   zeta(rho) = sum_{n<=m} n^-rho - m^(1-rho)/(1-rho) - 1/(2 m^rho)
//               - sum_{n=1}^{l-1} (B_2n/2n) C(-rho, 2n-1) m^-(rho+2n-1)
//               - (B_2l/2l) C(-rho, 2l-1) eps m^-(rho+2l-1),  eps in (0,1).
//
// The unknown eps is bracketed by evaluating the last term at 0 and 1; the
// correction magnitudes must be non-increasing up to order l (the expansion
// is asymptotic and stops tightening past its turning point).
inline Interval zeta_em(double rho, const EmSettings& settings = {}) {
    if (!std::isfinite(rho))
        throw std::invalid_argument("zeta_em: rho must be finite");
    if (rho == 1.0)
        throw std::domain_error("zeta_em: rho = 1 is the pole");
    if (rho < 0.0)
        throw std::domain_error("zeta_em: rho < 0 is out of the supported domain");
    detail::validate_em_settings(settings);

    const double m = static_cast<double>(settings.m);
    const auto& coeffs = detail::bernoulli_correction_coeffs();

    NeumaierSum acc;
    for (int n = 1; n <= settings.m; ++n)
        acc.add(std::pow(static_cast<double>(n), -rho));
    acc.add(-std::pow(m, 1.0 - rho) / (1.0 - rho));
    acc.add(-0.5 * std::pow(m, -rho));

    double prev_mag = std::numeric_limits<double>::infinity();
    double last_term = 0.0; // correction of order l, bracketed over eps
    for (int n = 1; n <= settings.l; ++n) {
        const double term = -coeffs[static_cast<std::size_t>(n - 1)] *
                            gen_binomial(-rho, static_cast<unsigned>(2 * n - 1)) *
                            std::pow(m, -(rho + 2.0 * n - 1.0));
        const double mag = std::fabs(term);
        if (mag > prev_mag)
            throw std::invalid_argument(
                "zeta_em: correction order l=" + std::to_string(settings.l) +
                " is past the asymptotic turning point for rho=" + std::to_string(rho) +
                ", m=" + std::to_string(settings.m));
        prev_mag = mag;
        if (n < settings.l)
            acc.add(term);
        else
            last_term = term;
    }

    const double det = acc.value();
    const double slack =
        rounding_slack(acc.abs_sum() + std::fabs(last_term), acc.count() + 1);
    return Interval(det + std::fmin(0.0, last_term),
                    det + std::fmax(0.0, last_term))
        .widened(slack);
}

namespace detail {

inline NeumaierSum partial_power_sum_acc(double s, std::uint64_t m) {
    NeumaierSum acc;
    for (std::uint64_t n = 1; n <= m; ++n)
        acc.add(std::pow(static_cast<double>(n), -s));
    return acc;
}

} // namespace detail

// sum_{n=1}^{m} n^-s, compensated, ascending index.
inline double partial_power_sum(double s, std::uint64_t m) {
    if (m < 1)
        throw std::invalid_argument("partial_power_sum: m must be >= 1");
    if (!std::isfinite(s))
        throw std::invalid_argument("partial_power_sum: s must be finite");
    return detail::partial_power_sum_acc(s, m).value();
}

// Bracket for the tail sum_{n=m}^inf n^-s, s > 1: the zeta bracket minus the
// exact head, intersected with the integral-test bracket
// [m^(1-s)/(s-1), m^-s + m^(1-s)/(s-1)].
inline Interval tail_power_sum(double s, std::uint64_t m, const EmSettings& settings = {}) {
    if (!(s > 1.0))
        throw std::domain_error("tail_power_sum: tail diverges for s <= 1");
    if (m < 1)
        throw std::invalid_argument("tail_power_sum: m must be >= 1");

    const Interval zeta = zeta_em(s, settings);
    const NeumaierSum head = detail::partial_power_sum_acc(s, m - 1);
    const double head_slack = rounding_slack(head.abs_sum(), head.count());
    const Interval via_zeta(zeta.lo - head.value() - head_slack,
                            zeta.hi - head.value() + head_slack);

    const double md = static_cast<double>(m);
    const double integral = std::pow(md, 1.0 - s) / (s - 1.0);
    const double first = std::pow(md, -s);
    const Interval integral_test =
        Interval(integral, integral + first).widened(rounding_slack(integral + first, 3));

    return via_zeta.intersect(integral_test);
}

} // namespace hhv
