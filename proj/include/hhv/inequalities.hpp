#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hhv/params.hpp"
#include "hhv/sequence.hpp"
#include "hhv/summation.hpp"

namespace hhv {

enum class InequalityId { I31, I32, I33, I34, I35, I36, I37, I38, YANG13 };

inline const char* to_string(InequalityId id) {
    switch (id) {
    case InequalityId::I31: return "3.1";
    case InequalityId::I32: return "3.2";
    case InequalityId::I33: return "3.3";
    case InequalityId::I34: return "3.4";
    case InequalityId::I35: return "3.5";
    case InequalityId::I36: return "3.6";
    case InequalityId::I37: return "3.7";
    case InequalityId::I38: return "3.8";
    case InequalityId::YANG13: return "1.3";
    }
    return "?";
}

inline InequalityId inequality_from_string(std::string_view s) {
    if (s == "3.1") return InequalityId::I31;
    if (s == "3.2") return InequalityId::I32;
    if (s == "3.3") return InequalityId::I33;
    if (s == "3.4") return InequalityId::I34;
    if (s == "3.5") return InequalityId::I35;
    if (s == "3.6") return InequalityId::I36;
    if (s == "3.7") return InequalityId::I37;
    if (s == "3.8") return InequalityId::I38;
    if (s == "1.3" || s == "yang") return InequalityId::YANG13;
    throw std::invalid_argument("unknown inequality id '" + std::string(s) +
                                "' (expected 1.3 or 3.1..3.8)");
}

// Outcome of one inequality instance. holds is the strict comparison
// lhs < rhs; improvement is how much the sharpened right side undercuts the
// plain k_lambda bound on the same inputs.
struct VerificationReport {
    InequalityId id = InequalityId::I31;
    double lhs = 0.0;
    double rhs = 0.0;
    double rhs_baseline = 0.0;
    bool holds = false;
    double improvement = 0.0;
    double p = 0.0;
    double q = 0.0;
    double lambda = 0.0;
    std::string a_label;
    std::string b_label;
    std::uint64_t lhs_truncation = 0; // outer-sum cutoff for series forms, 0 = exact
};

namespace detail {

inline double at1(const Sequence& s, std::uint64_t n) {
    return n <= s.size() ? s.values[n - 1] : 0.0;
}

inline void make_report(VerificationReport& r, const HolderParams& params,
                        const Sequence& a, const Sequence* b) {
    r.p = params.p();
    r.q = params.q();
    r.lambda = params.lambda();
    r.a_label = a.label;
    if (b) r.b_label = b->label;
    r.holds = r.lhs < r.rhs;
    r.improvement = r.rhs_baseline - r.rhs;
}

} // namespace detail

// Bilinear form sum_{m,n} a_m b_n / max{m,n}^lambda over the finite supports,
// folded to a single pass: grouping pairs by k = max(m,n) gives
//   sum_k k^-lambda (a_k B_k + b_k A_{k-1}),  X_k = x_1 + ... + x_k.
inline double kernel_double_sum(const Sequence& a, const Sequence& b,
                                const HolderParams& params) {
    const std::uint64_t n_max = std::max(a.size(), b.size());
    const double lam = params.lambda();
    NeumaierSum total, prefix_a, prefix_b;
    for (std::uint64_t k = 1; k <= n_max; ++k) {
        const double ak = detail::at1(a, k);
        const double bk = detail::at1(b, k);
        const double prefix_a_prev = prefix_a.value();
        prefix_b.add(bk);
        const double row = ak * prefix_b.value() + bk * prefix_a_prev;
        total.add(std::pow(static_cast<double>(k), -lam) * row);
        prefix_a.add(ak);
    }
    return total.value();
}

// Quadratic-path evaluation of the same double sum; kept as the independent
// cross-check (and timing baseline) for the folded kernel.
inline double kernel_double_sum_naive(const Sequence& a, const Sequence& b,
                                      const HolderParams& params) {
    const double lam = params.lambda();
    NeumaierSum total;
    for (std::uint64_t n = 1; n <= b.size(); ++n)
        for (std::uint64_t m = 1; m <= a.size(); ++m) {
            const double k = static_cast<double>(std::max(m, n));
            total.add(a.values[m - 1] * b.values[n - 1] * std::pow(k, -lam));
        }
    return total.value();
}

namespace detail {

// Correction subtracted from k_lambda inside the sharpened norm weights.
// numerator_one switches to the weaker corollary form (p or q replaced by 1).
inline double bracket_factor_p(std::uint64_t n, const HolderParams& params,
                               bool numerator_one = false) {
    const double p = params.p(), lam = params.lambda();
    const double num = numerator_one ? 1.0 : p;
    return params.k_lambda() -
           num / (3.0 * (p + lam - 2.0) *
                  std::pow(static_cast<double>(n), (p + lam - 2.0) / p));
}

inline double bracket_factor_q(std::uint64_t n, const HolderParams& params,
                               bool numerator_one = false) {
    const double q = params.q(), lam = params.lambda();
    const double num = numerator_one ? 1.0 : q;
    return params.k_lambda() -
           num / (3.0 * (q + lam - 2.0) *
                  std::pow(static_cast<double>(n), (q + lam - 2.0) / q));
}

// sum_n w(n) n^((r-1)(2-lambda)-1) x_n^r for r = p or q, with an optional
// sharpening weight. The n=1 factor is the smallest; it must stay positive
// for the norm to make sense, which holds for every admissible parameter
// pair and is asserted rather than assumed.
template <typename BracketFn>
double weighted_norm_sum(const Sequence& x, double r, double lambda, BracketFn bracket) {
    const double b1 = bracket(std::uint64_t{1});
    if (!(b1 > 0.0))
        throw std::logic_error("weighted norm: nonpositive sharpening factor at n=1 "
                               "(parameters outside the proven regime)");
    NeumaierSum sum;
    for (std::uint64_t n = 1; n <= x.size(); ++n) {
        const double weight = std::pow(static_cast<double>(n), (r - 1.0) * (2.0 - lambda) - 1.0);
        sum.add(bracket(n) * weight * std::pow(x.values[n - 1], r));
    }
    return sum.value();
}

inline double plain_norm_sum(const Sequence& x, double r, double lambda) {
    return weighted_norm_sum(x, r, lambda, [](std::uint64_t) { return 1.0; });
}

} // namespace detail

// Sharpened right side of the bilinear inequality.
inline double rhs_31(const Sequence& a, const Sequence& b, const HolderParams& params) {
    const double fp = detail::weighted_norm_sum(
        a, params.p(), params.lambda(),
        [&](std::uint64_t n) { return detail::bracket_factor_p(n, params); });
    const double fq = detail::weighted_norm_sum(
        b, params.q(), params.lambda(),
        [&](std::uint64_t n) { return detail::bracket_factor_q(n, params); });
    return std::pow(fp, 1.0 / params.p()) * std::pow(fq, 1.0 / params.q());
}

// Baseline right side with the plain constant k_lambda.
inline double rhs_yang13(const Sequence& a, const Sequence& b, const HolderParams& params) {
    const double np = detail::plain_norm_sum(a, params.p(), params.lambda());
    const double nq = detail::plain_norm_sum(b, params.q(), params.lambda());
    return params.k_lambda() * std::pow(np, 1.0 / params.p()) *
           std::pow(nq, 1.0 / params.q());
}

inline VerificationReport verify_31(const Sequence& a, const Sequence& b,
                                    const HolderParams& params) {
    a.validate();
    b.validate();
    VerificationReport r;
    r.id = InequalityId::I31;
    r.lhs = kernel_double_sum(a, b, params);
    r.rhs = rhs_31(a, b, params);
    r.rhs_baseline = rhs_yang13(a, b, params);
    detail::make_report(r, params, a, &b);
    return r;
}

inline VerificationReport verify_yang13(const Sequence& a, const Sequence& b,
                                        const HolderParams& params) {
    a.validate();
    b.validate();
    VerificationReport r;
    r.id = InequalityId::YANG13;
    r.lhs = kernel_double_sum(a, b, params);
    r.rhs = rhs_yang13(a, b, params);
    r.rhs_baseline = r.rhs;
    detail::make_report(r, params, a, &b);
    return r;
}

namespace detail {

// Left side of the series forms: sum_{n<=n_max} n^(p+lambda-3) S_n^p with
// S_n = sum_m a_m / max{m,n}^lambda. S_n is assembled from one prefix and one
// suffix pass over the support, then the outer sum is truncated at n_max.
// Truncation only lowers the value, so a verdict of "holds" survives it.
inline double series_lhs(const Sequence& a, const HolderParams& params,
                         std::uint64_t n_max) {
    const std::uint64_t support = a.size();
    if (n_max < support)
        throw std::invalid_argument("series form: n_max must cover the support");
    const double p = params.p(), lam = params.lambda();

    std::vector<double> prefix(support + 1, 0.0);
    {
        NeumaierSum acc;
        for (std::uint64_t n = 1; n <= support; ++n) {
            acc.add(a.values[n - 1]);
            prefix[n] = acc.value();
        }
    }
    std::vector<double> suffix(support + 2, 0.0); // suffix[n] = sum_{m>=n} a_m m^-lambda
    {
        NeumaierSum acc;
        for (std::uint64_t n = support; n >= 1; --n) {
            acc.add(a.values[n - 1] * std::pow(static_cast<double>(n), -lam));
            suffix[n] = acc.value();
        }
    }

    NeumaierSum lhs;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        const double nd = static_cast<double>(n);
        const double head = std::pow(nd, -lam) * prefix[std::min(n, support)];
        const double inner = head + (n < support ? suffix[n + 1] : 0.0);
        lhs.add(std::pow(nd, p + lam - 3.0) * std::pow(inner, p));
    }
    return lhs.value();
}

inline VerificationReport verify_series_form(InequalityId id, const Sequence& a,
                                             const HolderParams& params,
                                             std::uint64_t n_max, bool numerator_one) {
    a.validate();
    VerificationReport r;
    r.id = id;
    r.lhs_truncation = n_max;
    r.lhs = series_lhs(a, params, n_max);
    const double k = params.k_lambda();
    const double kpm1 = std::pow(k, params.p() - 1.0);
    r.rhs = kpm1 * weighted_norm_sum(a, params.p(), params.lambda(), [&](std::uint64_t n) {
                return bracket_factor_p(n, params, numerator_one);
            });
    r.rhs_baseline =
        kpm1 * k * plain_norm_sum(a, params.p(), params.lambda());
    make_report(r, params, a, nullptr);
    return r;
}

inline void require_lambda_one(const HolderParams& params, const char* which) {
    if (params.lambda() != 1.0)
        throw std::invalid_argument(std::string(which) + " requires lambda = 1");
}

inline void require_p2(const HolderParams& params, const char* which) {
    if (params.p() != 2.0)
        throw std::invalid_argument(std::string(which) + " requires p = q = 2");
}

} // namespace detail

inline VerificationReport verify_32(const Sequence& a, const HolderParams& params,
                                    std::uint64_t n_max) {
    return detail::verify_series_form(InequalityId::I32, a, params, n_max, false);
}

inline VerificationReport verify_33(const Sequence& a, const Sequence& b,
                                    const HolderParams& params) {
    a.validate();
    b.validate();
    VerificationReport r;
    r.id = InequalityId::I33;
    r.lhs = kernel_double_sum(a, b, params);
    const double fp = detail::weighted_norm_sum(
        a, params.p(), params.lambda(),
        [&](std::uint64_t n) { return detail::bracket_factor_p(n, params, true); });
    const double fq = detail::weighted_norm_sum(
        b, params.q(), params.lambda(),
        [&](std::uint64_t n) { return detail::bracket_factor_q(n, params, true); });
    r.rhs = std::pow(fp, 1.0 / params.p()) * std::pow(fq, 1.0 / params.q());
    r.rhs_baseline = rhs_yang13(a, b, params);
    detail::make_report(r, params, a, &b);
    return r;
}

inline VerificationReport verify_34(const Sequence& a, const HolderParams& params,
                                    std::uint64_t n_max) {
    return detail::verify_series_form(InequalityId::I34, a, params, n_max, true);
}

// lambda = 1 forms, written from their own closed formulas so they double as
// consistency checks against the general-path evaluations.

inline VerificationReport verify_35(const Sequence& a, const Sequence& b,
                                    const HolderParams& params) {
    detail::require_lambda_one(params, "3.5");
    a.validate();
    b.validate();
    const double p = params.p(), q = params.q();
    VerificationReport r;
    r.id = InequalityId::I35;
    r.lhs = kernel_double_sum(a, b, params);
    const double fp = detail::weighted_norm_sum(a, p, 1.0, [&](std::uint64_t n) {
        return 1.0 - 1.0 / (3.0 * q * (p - 1.0) *
                            std::pow(static_cast<double>(n), (p - 1.0) / p));
    });
    const double fq = detail::weighted_norm_sum(b, q, 1.0, [&](std::uint64_t n) {
        return 1.0 - 1.0 / (3.0 * p * (q - 1.0) *
                            std::pow(static_cast<double>(n), (q - 1.0) / q));
    });
    r.rhs = p * q * std::pow(fp, 1.0 / p) * std::pow(fq, 1.0 / q);
    r.rhs_baseline = rhs_yang13(a, b, params);
    detail::make_report(r, params, a, &b);
    return r;
}

inline VerificationReport verify_36(const Sequence& a, const HolderParams& params,
                                    std::uint64_t n_max) {
    detail::require_lambda_one(params, "3.6");
    a.validate();
    const double p = params.p(), q = params.q();
    VerificationReport r;
    r.id = InequalityId::I36;
    r.lhs_truncation = n_max;
    r.lhs = detail::series_lhs(a, params, n_max);
    const double f = detail::weighted_norm_sum(a, p, 1.0, [&](std::uint64_t n) {
        return 1.0 - 1.0 / (3.0 * q * (p - 1.0) *
                            std::pow(static_cast<double>(n), (p - 1.0) / p));
    });
    r.rhs = std::pow(p * q, p) * f;
    r.rhs_baseline = std::pow(p * q, p) * detail::plain_norm_sum(a, p, 1.0);
    detail::make_report(r, params, a, nullptr);
    return r;
}

inline VerificationReport verify_37(const Sequence& a, const Sequence& b,
                                    const HolderParams& params) {
    detail::require_lambda_one(params, "3.7");
    detail::require_p2(params, "3.7");
    a.validate();
    b.validate();
    VerificationReport r;
    r.id = InequalityId::I37;
    r.lhs = kernel_double_sum(a, b, params);
    const auto w = [](std::uint64_t n) {
        return 1.0 - 1.0 / (6.0 * std::sqrt(static_cast<double>(n)));
    };
    const double fa = detail::weighted_norm_sum(a, 2.0, 1.0, w);
    const double fb = detail::weighted_norm_sum(b, 2.0, 1.0, w);
    r.rhs = 4.0 * std::sqrt(fa) * std::sqrt(fb);
    r.rhs_baseline = rhs_yang13(a, b, params);
    detail::make_report(r, params, a, &b);
    return r;
}

inline VerificationReport verify_38(const Sequence& a, const HolderParams& params,
                                    std::uint64_t n_max) {
    detail::require_lambda_one(params, "3.8");
    detail::require_p2(params, "3.8");
    a.validate();
    VerificationReport r;
    r.id = InequalityId::I38;
    r.lhs_truncation = n_max;
    r.lhs = detail::series_lhs(a, params, n_max);
    const double f = detail::weighted_norm_sum(a, 2.0, 1.0, [](std::uint64_t n) {
        return 1.0 - 1.0 / (6.0 * std::sqrt(static_cast<double>(n)));
    });
    r.rhs = 16.0 * f;
    r.rhs_baseline = 16.0 * detail::plain_norm_sum(a, 2.0, 1.0);
    detail::make_report(r, params, a, nullptr);
    return r;
}

// Every corollary whose hypotheses the parameters satisfy, in id order. The
// weaker corollary right side must dominate the sharpened one, which is
// checked on the fly.
inline std::vector<VerificationReport> verify_corollaries(const Sequence& a,
                                                          const Sequence& b,
                                                          const HolderParams& params,
                                                          std::uint64_t n_max = 100000) {
    std::vector<VerificationReport> out;
    out.push_back(verify_33(a, b, params));
    out.push_back(verify_34(a, params, n_max));

    const double sharp = rhs_31(a, b, params);
    if (out[0].rhs < sharp * (1.0 - 1e-12))
        throw std::logic_error("corollary right side fell below the sharpened one");

    if (params.lambda() == 1.0) {
        out.push_back(verify_35(a, b, params));
        out.push_back(verify_36(a, params, n_max));
        if (params.p() == 2.0) {
            out.push_back(verify_37(a, b, params));
            out.push_back(verify_38(a, params, n_max));
        }
    }
    return out;
}

// Best-constant probe: on the extremal family a_n = n^(-((p-1)(2-lambda)+eps)/p),
// b_n = n^(-((q-1)(2-lambda)+eps)/q) (both plain weighted norms then behave
// like sum n^(-1-eps)), the ratio of the bilinear form to the product of
// plain norms stays below k_lambda and climbs toward it as eps -> 0 and the
// truncation grows.
struct ProbeResult {
    double ratio = 0.0;
    double constant = 0.0; // k_lambda
    double gap = 0.0;      // constant - ratio
};

inline ProbeResult sharpness_probe(const HolderParams& params, double eps,
                                   std::uint64_t n_terms) {
    if (!(eps > 0.0))
        throw std::invalid_argument("sharpness_probe: eps must be positive");
    if (n_terms < 1000)
        throw std::invalid_argument("sharpness_probe: need at least 1000 terms");

    const double p = params.p(), q = params.q(), lam = params.lambda();
    const double ta = (-(p - 1.0) * (2.0 - lam) - eps) / p;
    const double tb = (-(q - 1.0) * (2.0 - lam) - eps) / q;

    Sequence a, b;
    a.label = "extremal:p";
    b.label = "extremal:q";
    a.values.reserve(n_terms);
    b.values.reserve(n_terms);
    for (std::uint64_t n = 1; n <= n_terms; ++n) {
        a.values.push_back(std::pow(static_cast<double>(n), ta));
        b.values.push_back(std::pow(static_cast<double>(n), tb));
    }

    const double lhs = kernel_double_sum(a, b, params);
    const double np = detail::plain_norm_sum(a, p, lam);
    const double nq = detail::plain_norm_sum(b, q, lam);
    const double ratio = lhs / (std::pow(np, 1.0 / p) * std::pow(nq, 1.0 / q));
    return ProbeResult{ratio, params.k_lambda(), params.k_lambda() - ratio};
}

} // namespace hhv
