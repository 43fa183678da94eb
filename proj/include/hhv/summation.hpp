#pragma once

#include <cmath>
#include <cstddef>

#if defined(__FAST_MATH__)
#error "-ffast-math breaks compensated summation; build without it"
#endif

namespace hhv {

// Neumaier-compensated accumulator. Tracks the running absolute mass and
// term count so callers can attach a rounding-slack bound to the result.
class NeumaierSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::fabs(sum_) >= std::fabs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
        abs_ += std::fabs(x);
        ++count_;
    }

    double value() const { return sum_ + comp_; }
    double abs_sum() const { return abs_; }
    std::size_t count() const { return count_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
    double abs_ = 0.0;
    std::size_t count_ = 0;
};

} // namespace hhv
