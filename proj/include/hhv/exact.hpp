#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hhv {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, always in canonical form (denominator > 0,
// gcd(|num|, den) = 1). cpp_rational maintains both invariants internally.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

// Exact values B_0..B_max under the B_1 = -1/2 convention; every odd entry
// past B_1 is exactly zero.
struct BernoulliTable {
    std::vector<Rational> values;

    const Rational& at(std::size_t n) const { return values.at(n); }
    std::size_t max_index() const { return values.size() - 1; }
};

inline constexpr std::size_t kBernoulliIndexCap = 200;

// Standard recurrence: B_0 = 1, sum_{j=0}^{n} C(n+1, j) B_j = 0, solved for
// B_n row by row with exact integer binomials.
inline BernoulliTable bernoulli_table(std::size_t max_index) {
    if (max_index > kBernoulliIndexCap)
        throw std::invalid_argument("bernoulli_table: index cap is 200");

    BernoulliTable table;
    table.values.reserve(max_index + 1);
    table.values.emplace_back(1);
    for (std::size_t n = 1; n <= max_index; ++n) {
        Rational acc = 0;
        BigInt binom = 1; // C(n+1, 0)
        for (std::size_t j = 0; j < n; ++j) {
            acc += Rational(binom) * table.values[j];
            binom = binom * BigInt(n + 1 - j) / BigInt(j + 1); // -> C(n+1, j+1)
        }
        // binom now holds C(n+1, n) = n+1
        table.values.push_back(-acc / Rational(binom));
    }
    return table;
}

namespace detail {

// Error-free product split via fused multiply-add.
inline void two_prod(double a, double b, double& hi, double& lo) {
    hi = a * b;
    lo = std::fma(a, b, -hi);
}

} // namespace detail

// Generalized binomial coefficient: prod_{j=0}^{k-1} (alpha - j) / k!.
// Evaluated as a compensated product of the factors (alpha - j)/(j + 1) in
// ascending j, which keeps intermediate values at binomial scale and is
// exact for integer alpha with k <= alpha.
inline double gen_binomial(double alpha, unsigned k) {
    if (!std::isfinite(alpha))
        throw std::invalid_argument("gen_binomial: alpha must be finite");
    double hi = 1.0, lo = 0.0;
    for (unsigned j = 0; j < k; ++j) {
        const double f = alpha - static_cast<double>(j);
        double ph, pl;
        detail::two_prod(hi, f, ph, pl);
        lo = std::fma(lo, f, pl);
        const double d = static_cast<double>(j + 1);
        const double qh = ph / d;
        lo = (std::fma(-qh, d, ph) + lo) / d;
        hi = qh;
    }
    return hi + lo;
}

} // namespace hhv
