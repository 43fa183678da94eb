#pragma once

#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>

#include "hhv/summation.hpp"

namespace hhv {

// Per-term rounding slack, in ulps. Overridable through the environment so
// reports can be reproduced with a different safety factor.
inline int precision_slack_ulps() {
    static const int cached = [] {
        if (const char* s = std::getenv("HHV_DEFAULT_PRECISION_SLACK_ULPS")) {
            char* end = nullptr;
            const long v = std::strtol(s, &end, 10);
            if (end != s && *end == '\0' && v >= 0 && v <= 1024)
                return static_cast<int>(v);
        }
        return 4;
    }();
    return cached;
}

// Slack for a sum with the given absolute mass: `ulps` per accumulated term,
// over-approximated as ulps * eps * sum(|t_i|). A denormal floor keeps the
// bound nonzero when every term underflows.
inline double rounding_slack(double abs_sum, std::size_t terms,
                             int ulps = precision_slack_ulps()) {
    const double eps = std::numeric_limits<double>::epsilon();
    return static_cast<double>(ulps) * eps * abs_sum +
           static_cast<double>(terms) * std::numeric_limits<double>::denorm_min();
}

// Closed bracket [lo, hi] certified to contain the exact value of an
// infinite-sum evaluation, truncation and rounding error included.
struct Interval {
    double lo;
    double hi;

    Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
        if (!(lo <= hi) || !std::isfinite(hi - lo))
            throw std::logic_error("Interval: endpoints out of order or non-finite width");
    }

    static Interval point(double x) { return Interval(x, x); }

    double width() const { return hi - lo; }
    double mid() const { return 0.5 * (lo + hi); }
    bool contains(double x) const { return lo <= x && x <= hi; }
    bool intersects(const Interval& o) const { return lo <= o.hi && o.lo <= hi; }

    // Shift both endpoints outward by a nonnegative amount.
    Interval widened(double slack) const { return Interval(lo - slack, hi + slack); }

    Interval operator+(const Interval& o) const { return Interval(lo + o.lo, hi + o.hi); }
    Interval operator+(double x) const { return Interval(lo + x, hi + x); }
    Interval operator-(double x) const { return Interval(lo - x, hi - x); }

    // Scale by a nonnegative factor.
    Interval scaled(double c) const {
        if (!(c >= 0.0))
            throw std::logic_error("Interval::scaled: negative factor");
        return Interval(lo * c, hi * c);
    }

    Interval intersect(const Interval& o) const {
        const double l = lo > o.lo ? lo : o.lo;
        const double h = hi < o.hi ? hi : o.hi;
        if (l > h)
            throw std::logic_error("Interval::intersect: empty intersection (brackets disagree)");
        return Interval(l, h);
    }
};

// Accumulator value with its slack attached outward.
inline Interval to_interval(const NeumaierSum& acc) {
    const double s = rounding_slack(acc.abs_sum(), acc.count());
    return Interval(acc.value() - s, acc.value() + s);
}

} // namespace hhv
