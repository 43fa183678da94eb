#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>

#include "hhv/interval.hpp"
#include "hhv/summation.hpp"
#include "oracles.hpp"

using hhv::Interval;
using hhv::NeumaierSum;

TEST_CASE("interval invariants") {
    CHECK_THROWS_AS(Interval(1.0, 0.0), std::logic_error);
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(Interval(-inf, inf), std::logic_error);

    const Interval i(1.0, 2.0);
    CHECK(i.width() == 1.0);
    CHECK(i.mid() == 1.5);
    CHECK(i.contains(1.0));
    CHECK(i.contains(2.0));
    CHECK_FALSE(i.contains(2.0000001));
    CHECK(i.widened(0.5).contains(2.4));
    CHECK(i.scaled(2.0).hi == 4.0);
    CHECK_THROWS_AS(i.scaled(-1.0), std::logic_error);
}

TEST_CASE("interval intersection") {
    const Interval a(0.0, 2.0);
    const Interval b(1.0, 3.0);
    REQUIRE(a.intersects(b));
    const Interval c = a.intersect(b);
    CHECK(c.lo == 1.0);
    CHECK(c.hi == 2.0);
    CHECK_THROWS_AS(Interval(0.0, 1.0).intersect(Interval(2.0, 3.0)), std::logic_error);
}

TEST_CASE("default slack is four ulps per term") {
    CHECK(hhv::precision_slack_ulps() == 4);
    const double one_term = hhv::rounding_slack(1.0, 1);
    CHECK(one_term >= 4.0 * std::numeric_limits<double>::epsilon());
    CHECK(one_term < 5.0 * std::numeric_limits<double>::epsilon());
    // grows with absolute mass, not with the signed sum
    CHECK(hhv::rounding_slack(100.0, 2) > hhv::rounding_slack(1.0, 2));
}

TEST_CASE("compensated sum absorbs cancellation the plain sum cannot") {
    NeumaierSum s;
    double plain = 0.0;
    for (int i = 0; i < 1000; ++i) {
        for (double x : {1e16, 3.14159, -1e16}) {
            s.add(x);
            plain += x;
        }
    }
    CHECK(s.value() == Catch::Approx(1000 * 3.14159).epsilon(1e-13));
    CHECK(std::fabs(plain - 1000 * 3.14159) > 1.0); // the point of compensating
    CHECK(s.count() == 3000);
    CHECK(s.abs_sum() == Catch::Approx(2000e16).epsilon(1e-12));
}

TEST_CASE("compensated sum tracks a widened-precision reference") {
    hhv_test::TestRng rng(99);
    NeumaierSum s;
    long double ref = 0.0L;
    for (int i = 0; i < 20000; ++i) {
        const double x = (rng.next_unit() - 0.5) * std::pow(10.0, rng.next_in(-8.0, 8.0));
        s.add(x);
        ref += static_cast<long double>(x);
    }
    CHECK(s.value() == Catch::Approx(static_cast<double>(ref)).margin(1e-8));
}
