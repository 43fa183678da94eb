#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "hhv/interval.hpp"
#include "hhv/params.hpp"
#include "hhv/zeta.hpp"

namespace hhv {

// Weight coefficient at one index: certified bracket for the series value,
// the closed-form upper bound, and the signed margin between them. The
// margin is taken against the pessimistic endpoint, so margin > 0 certifies
// the bound and margin > -width(value) certifies it at bracket resolution.
struct WeightEstimate {
    std::uint64_t m = 0;
    Interval value = Interval::point(0.0);
    double bound = 0.0;
    double margin = 0.0;

    bool confirmed_at_resolution() const { return margin > -value.width(); }
};

// omega(m, lambda, p) = sum_n (m/n)^((2-lambda)/p) / max{m^lambda, n^lambda},
// evaluated through the split
//
//   m^((2-lambda)/p - lambda) sum_{n<=m} n^-(2-lambda)/p  -  m^-lambda
//     +  m^((2-lambda)/p) sum_{n>=m} n^-(2/p + lambda/q).
//
// The head terms are point values with ulp slack; the tail bracket carries
// the truncation error.
inline Interval weight_omega(std::uint64_t m, const HolderParams& params,
                             const EmSettings& settings = {}) {
    if (m < 1)
        throw std::invalid_argument("weight_omega: m must be >= 1");
    const double md = static_cast<double>(m);
    const double e = (2.0 - params.lambda()) / params.p();

    const NeumaierSum head = detail::partial_power_sum_acc(e, m);
    const double head_factor = std::pow(md, e - params.lambda());
    const double head_value = head_factor * head.value();
    const double diag = std::pow(md, -params.lambda());

    const Interval tail =
        tail_power_sum(params.tail_exponent(), m, settings).scaled(std::pow(md, e));

    const double abs_mass = std::fabs(head_factor) * head.abs_sum() + diag +
                            std::fmax(std::fabs(tail.lo), std::fabs(tail.hi));
    const double slack = rounding_slack(abs_mass, head.count() + 4);
    return (tail + (head_value - diag)).widened(slack);
}

// omega(n, lambda, q): the same series with the roles of p and q exchanged.
inline Interval weight_omega_dual(std::uint64_t n, const HolderParams& params,
                                  const EmSettings& settings = {}) {
    return weight_omega(n, params.swapped(), settings);
}

// Upper bound m^(1-lambda) [k_lambda - p / (3 (p+lambda-2) m^((p+lambda-2)/p))].
inline double bound_24(std::uint64_t m, const HolderParams& params) {
    const double md = static_cast<double>(m);
    const double p = params.p(), lam = params.lambda();
    const double corr = p / (3.0 * (p + lam - 2.0) * std::pow(md, (p + lam - 2.0) / p));
    return std::pow(md, 1.0 - lam) * (params.k_lambda() - corr);
}

// The dual-side bound comes in two spellings that differ in the correction
// denominator; `symmetric` (denominator q+lambda-2, matching the bilinear
// inequality's second factor) is the default, `literal` keeps p+lambda-2.
// The literal form can go negative for p < 2 and is retained only so tests
// can document the discrepancy.
enum class DualBoundForm { symmetric, literal };

inline double bound_25(std::uint64_t n, const HolderParams& params,
                       DualBoundForm form = DualBoundForm::symmetric) {
    const double nd = static_cast<double>(n);
    const double p = params.p(), q = params.q(), lam = params.lambda();
    const double denom = form == DualBoundForm::symmetric ? (q + lam - 2.0) : (p + lam - 2.0);
    const double corr = q / (3.0 * denom * std::pow(nd, (q + lam - 2.0) / q));
    return std::pow(nd, 1.0 - lam) * (params.k_lambda() - corr);
}

inline std::vector<WeightEstimate> check_weight_bounds(const HolderParams& params,
                                                       std::uint64_t m_max,
                                                       const EmSettings& settings = {}) {
    std::vector<WeightEstimate> out;
    out.reserve(m_max);
    for (std::uint64_t m = 1; m <= m_max; ++m) {
        const Interval value = weight_omega(m, params, settings);
        const double bound = bound_24(m, params);
        out.push_back(WeightEstimate{m, value, bound, bound - value.hi});
    }
    return out;
}

inline std::vector<WeightEstimate> check_weight_bounds_dual(
    const HolderParams& params, std::uint64_t m_max, const EmSettings& settings = {},
    DualBoundForm form = DualBoundForm::symmetric) {
    std::vector<WeightEstimate> out;
    out.reserve(m_max);
    for (std::uint64_t n = 1; n <= m_max; ++n) {
        const Interval value = weight_omega_dual(n, params, settings);
        const double bound = bound_25(n, params, form);
        out.push_back(WeightEstimate{n, value, bound, bound - value.hi});
    }
    return out;
}

// One link of the chain that keeps the bound's correction term positive:
//
//   -zeta((2-lambda)/p) - (p lambda + 2q)/(12 p q m^((p+lambda-2)/p))
//       > p / (3 (p+lambda-2)).
//
// gap is the excess of the left side over the right, computed with the
// pessimistic zeta endpoint; resolution is the slack below zero a true-zero
// gap may exhibit. At lambda = 2, m = 1 the gap is exactly zero for every
// conjugate pair, so the chain is checked at bracket resolution, not strictly.
struct NegativityGap {
    std::uint64_t m = 0;
    double gap = 0.0;
    double resolution = 0.0;

    bool holds_at_resolution() const { return gap >= -resolution; }
};

inline std::vector<NegativityGap> check_negativity_chain(const HolderParams& params,
                                                         std::uint64_t m_max,
                                                         const EmSettings& settings = {}) {
    const double p = params.p(), q = params.q(), lam = params.lambda();
    const double rho = (2.0 - lam) / p;
    if (!(rho >= 0.0 && rho < 1.0))
        throw std::invalid_argument("check_negativity_chain: exponent outside [0,1)");

    const Interval zeta = zeta_em(rho, settings);
    const double rhs = p / (3.0 * (p + lam - 2.0));
    std::vector<NegativityGap> out;
    out.reserve(m_max);
    for (std::uint64_t m = 1; m <= m_max; ++m) {
        const double damp = (p * lam + 2.0 * q) /
                            (12.0 * p * q * std::pow(static_cast<double>(m), (p + lam - 2.0) / p));
        const double gap = (-zeta.hi - damp) - rhs;
        const double res =
            zeta.width() + rounding_slack(std::fabs(zeta.hi) + damp + rhs, 3);
        out.push_back(NegativityGap{m, gap, res});
    }
    return out;
}

} // namespace hhv
