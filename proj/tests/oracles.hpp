#pragma once

// Brute-force reference computations used only by the tests. Everything here
// deliberately avoids the correction-series machinery in hhv/zeta.hpp: sums
// are evaluated term by term and tails are bracketed by the integral test,
// so agreement with the library is a genuine two-route check.

#include <cmath>
#include <cstdint>
#include <vector>

#include "hhv/exact.hpp"
#include "hhv/interval.hpp"
#include "hhv/params.hpp"
#include "hhv/summation.hpp"

namespace hhv_test {

// Bernoulli numbers via the Akiyama-Tanigawa scheme (B_1 = +1/2 convention;
// the sign is flipped at odd index 1 to match the table's convention).
inline hhv::Rational bernoulli_akiyama_tanigawa(unsigned n) {
    std::vector<hhv::Rational> row(n + 1);
    for (unsigned m = 0; m <= n; ++m) {
        row[m] = hhv::Rational(1, m + 1);
        for (unsigned j = m; j >= 1; --j)
            row[j - 1] = hhv::Rational(j) * (row[j - 1] - row[j]);
    }
    if (n == 1)
        return -row[0];
    return row[0];
}

// Integral-test bracket for sum_{n=from}^inf n^-s, s > 1.
inline hhv::Interval tail_bracket_integral(double s, std::uint64_t from) {
    const double f = static_cast<double>(from);
    const double integral = std::pow(f, 1.0 - s) / (s - 1.0);
    const double first = std::pow(f, -s);
    return hhv::Interval(integral, integral + first)
        .widened(hhv::rounding_slack(integral + first, 3));
}

// Direct summation of the weight series: N terms of
// (m/n)^((2-lambda)/p) / max{m^lambda, n^lambda}, then the integral-test
// bracket for the rest. Splitting max() at n = m is definitional; no
// correction-series evaluation is involved anywhere.
inline hhv::Interval weight_omega_direct(std::uint64_t m, const hhv::HolderParams& params,
                                         std::uint64_t n_terms) {
    const double lam = params.lambda();
    const double e = (2.0 - lam) / params.p();
    const double s = lam + e; // tail decay exponent
    const double md = static_cast<double>(m);

    hhv::NeumaierSum sum;
    for (std::uint64_t n = 1; n <= m && n <= n_terms; ++n)
        sum.add(std::pow(md, -lam) * std::pow(md / static_cast<double>(n), e));
    for (std::uint64_t n = m + 1; n <= n_terms; ++n)
        sum.add(std::pow(md, e) * std::pow(static_cast<double>(n), -s));

    const hhv::Interval tail =
        tail_bracket_integral(s, n_terms + 1).scaled(std::pow(md, e));
    const double slack = hhv::rounding_slack(sum.abs_sum(), sum.count());
    return (tail + sum.value()).widened(slack);
}

// Batch form of the direct oracle: one backward pass accumulates the shared
// power sums, so a whole column m = 1..m_max costs a single sweep over the
// n_terms terms instead of m_max sweeps.
inline std::vector<hhv::Interval> weight_omega_direct_batch(const hhv::HolderParams& params,
                                                            std::uint64_t m_max,
                                                            std::uint64_t n_terms) {
    const double lam = params.lambda();
    const double e = (2.0 - lam) / params.p();
    const double s = lam + e;

    // suffix[n] = sum_{k=n}^{n_terms} k^-s, recorded where the column needs it
    std::vector<double> suffix(m_max + 2, 0.0);
    std::vector<double> suffix_abs(m_max + 2, 0.0);
    hhv::NeumaierSum acc;
    for (std::uint64_t n = n_terms; n >= 1; --n) {
        acc.add(std::pow(static_cast<double>(n), -s));
        if (n <= m_max + 1) {
            suffix[n] = acc.value();
            suffix_abs[n] = acc.abs_sum();
        }
    }
    const hhv::Interval far_tail = tail_bracket_integral(s, n_terms + 1);

    std::vector<hhv::Interval> out;
    out.reserve(m_max);
    for (std::uint64_t m = 1; m <= m_max; ++m) {
        const double md = static_cast<double>(m);
        hhv::NeumaierSum head;
        for (std::uint64_t n = 1; n <= m; ++n)
            head.add(std::pow(md, -lam) * std::pow(md / static_cast<double>(n), e));
        const double scale = std::pow(md, e);
        const hhv::Interval tail = (far_tail + suffix[m + 1]).scaled(scale);
        const double slack = hhv::rounding_slack(
            head.abs_sum() + scale * suffix_abs[m + 1], head.count() + n_terms + 4);
        out.push_back((tail + head.value()).widened(slack));
    }
    return out;
}

// Fully literal variant: one term per index, max() evaluated inside. Too
// slow for large N; used for small-N spot checks of the splitting above.
inline double weight_omega_terms_literal(std::uint64_t m, const hhv::HolderParams& params,
                                         std::uint64_t n_terms) {
    const double lam = params.lambda();
    const double e = (2.0 - lam) / params.p();
    const double md = static_cast<double>(m);
    hhv::NeumaierSum sum;
    for (std::uint64_t n = 1; n <= n_terms; ++n) {
        const double nd = static_cast<double>(n);
        sum.add(std::pow(md / nd, e) / std::fmax(std::pow(md, lam), std::pow(nd, lam)));
    }
    return sum.value();
}

// High-m plain partial sum, for pinning zeta values at s comfortably > 1.
inline hhv::Interval zeta_direct(double s, std::uint64_t n_terms) {
    hhv::NeumaierSum sum;
    for (std::uint64_t n = 1; n <= n_terms; ++n)
        sum.add(std::pow(static_cast<double>(n), -s));
    const hhv::Interval tail = tail_bracket_integral(s, n_terms + 1);
    return (tail + sum.value()).widened(hhv::rounding_slack(sum.abs_sum(), sum.count()));
}

// Deterministic scalar stream for property tests.
class TestRng {
public:
    explicit TestRng(std::uint64_t seed) : seed_(seed) {}

    double next_unit() {
        std::uint64_t z = seed_ + (++i_) * 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        z ^= z >> 31;
        return static_cast<double>(z >> 11) * 0x1.0p-53;
    }

    double next_in(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

private:
    std::uint64_t seed_;
    std::uint64_t i_ = 0;
};

} // namespace hhv_test
