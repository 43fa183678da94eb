#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "hhv/exact.hpp"
#include "oracles.hpp"

using hhv::bernoulli_table;
using hhv::gen_binomial;
using hhv::Rational;

TEST_CASE("bernoulli table matches the classical values") {
    const auto t = bernoulli_table(4);
    REQUIRE(t.values.size() == 5);
    CHECK(t.at(0) == Rational(1));
    CHECK(t.at(1) == Rational(-1, 2));
    CHECK(t.at(2) == Rational(1, 6));
    CHECK(t.at(3) == Rational(0));
    CHECK(t.at(4) == Rational(-1, 30));
}

TEST_CASE("bernoulli base case") {
    const auto t = bernoulli_table(0);
    REQUIRE(t.values.size() == 1);
    CHECK(t.at(0) == Rational(1));
}

TEST_CASE("bernoulli B_8 agrees with the Akiyama-Tanigawa oracle") {
    const auto t = bernoulli_table(8);
    CHECK(t.at(8) == hhv_test::bernoulli_akiyama_tanigawa(8));
    CHECK(t.at(8) == Rational(-1, 30));
}

TEST_CASE("bernoulli table agrees with the oracle through B_16") {
    const auto t = bernoulli_table(16);
    for (unsigned n = 0; n <= 16; ++n)
        CHECK(t.at(n) == hhv_test::bernoulli_akiyama_tanigawa(n));
    CHECK(t.at(12) == Rational(-691, 2730));
}

TEST_CASE("odd bernoulli numbers vanish") {
    const auto t = bernoulli_table(41);
    for (std::size_t k = 1; 2 * k + 1 <= t.max_index(); ++k)
        CHECK(t.at(2 * k + 1) == Rational(0));
}

TEST_CASE("bernoulli values are canonical rationals") {
    using boost::multiprecision::gcd;
    const auto t = bernoulli_table(30);
    for (const auto& v : t.values) {
        CHECK(hhv::denominator(v) > 0);
        CHECK(gcd(abs(hhv::numerator(v)), hhv::denominator(v)) == 1);
    }
}

TEST_CASE("bernoulli index cap") {
    CHECK_NOTHROW(bernoulli_table(200));
    CHECK_THROWS_AS(bernoulli_table(201), std::invalid_argument);
}

TEST_CASE("generalized binomial basics") {
    CHECK(gen_binomial(0.37, 0) == 1.0);
    CHECK(gen_binomial(-2.0, 1) == -2.0);
    CHECK(gen_binomial(-0.5, 3) == -0.3125); // (-1/2)(-3/2)(-5/2)/6
}

TEST_CASE("generalized binomial is exact on integer arguments") {
    // C(m, k) for 0 <= k <= m against an exact integer recurrence.
    long long pascal[21][21] = {};
    for (int m = 0; m <= 20; ++m) {
        pascal[m][0] = 1;
        for (int k = 1; k <= m; ++k)
            pascal[m][k] = pascal[m - 1][k - 1] + (k <= m - 1 ? pascal[m - 1][k] : 0);
    }
    for (int m = 0; m <= 20; ++m)
        for (int k = 0; k <= m; ++k)
            CHECK(gen_binomial(static_cast<double>(m), static_cast<unsigned>(k)) ==
                  static_cast<double>(pascal[m][k]));
}

TEST_CASE("generalized binomial satisfies the Pascal identity") {
    hhv_test::TestRng rng(2026);
    for (int trial = 0; trial < 200; ++trial) {
        const double alpha = rng.next_in(-8.0, 8.0);
        const unsigned k = 1 + static_cast<unsigned>(rng.next_in(0.0, 20.0));
        const double lhs = gen_binomial(alpha, k);
        const double r1 = gen_binomial(alpha - 1.0, k);
        const double r2 = gen_binomial(alpha - 1.0, k - 1);
        const double scale =
            std::fmax(std::fabs(lhs), std::fmax(std::fabs(r1), std::fabs(r2)));
        const double tol = 8.0 * std::numeric_limits<double>::epsilon() * scale;
        CHECK(std::fabs(lhs - (r1 + r2)) <= tol);
    }
}

TEST_CASE("generalized binomial rejects non-finite input") {
    CHECK_THROWS_AS(gen_binomial(std::numeric_limits<double>::infinity(), 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(gen_binomial(std::nan(""), 2), std::invalid_argument);
}
