#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <string>

#include "hhv/sequence.hpp"

using hhv::generate;
using hhv::Sequence;
using hhv::SeqKind;
using hhv::SeqSpec;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& contents) {
        path = "hhv_seq_test_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)) + ".txt";
        std::ofstream(path) << contents;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("unit prefix") {
    const Sequence s = generate(SeqSpec::parse("unit:3"));
    REQUIRE(s.values == std::vector<double>{1.0, 1.0, 1.0});
    CHECK(s.label == "unit:3");
}

TEST_CASE("power law values") {
    const Sequence s = generate(SeqSpec::parse("powerlaw:-0.5:3"));
    REQUIRE(s.size() == 3);
    CHECK(s.values[0] == 1.0);
    CHECK(s.values[1] == Catch::Approx(0.7071067811865476).epsilon(1e-15));
    CHECK(s.values[2] == Catch::Approx(0.5773502691896258).epsilon(1e-15));
}

TEST_CASE("seeded stream is reproducible and pinned") {
    const Sequence a = generate(SeqSpec::parse("random:42:4"));
    const Sequence b = generate(SeqSpec::parse("random:42:4"));
    REQUIRE(a.values == b.values);

    // frozen outputs of the published mixer; any drift here breaks every
    // seeded fixture downstream
    CHECK(a.values[0] == 0.7415648787718233);
    CHECK(a.values[1] == 0.1599103928769201);
    CHECK(a.values[2] == 0.27860113025513866);
    CHECK(a.values[3] == 0.34419071652363753);
    CHECK(hhv::detail::splitmix64_at(0, 0) == 0xe220a8397b1dcdafULL);

    for (double v : generate(SeqSpec::parse("random:7:64")).values)
        CHECK((v >= 0.0 && v < 1.0));
}

TEST_CASE("file ingestion with comments") {
    const TempFile f("# weights\n1.0\n  2.5 # trailing note\n\n0\n3e-2\n");
    const Sequence s = generate(SeqSpec::parse("file:" + f.path));
    REQUIRE(s.values == std::vector<double>{1.0, 2.5, 0.0, 0.03});
}

TEST_CASE("file ingestion errors name the offending line") {
    const TempFile bad("1.0\nnope\n");
    CHECK_THROWS_WITH(generate(SeqSpec::parse("file:" + bad.path)),
                      Catch::Matchers::ContainsSubstring(":2:"));

    const TempFile neg("1.0\n2.0\n-0.5\n");
    CHECK_THROWS_WITH(generate(SeqSpec::parse("file:" + neg.path)),
                      Catch::Matchers::ContainsSubstring(":3:"));

    CHECK_THROWS_AS(generate(SeqSpec::parse("file:/no/such/file")), std::runtime_error);
}

TEST_CASE("spec parse errors") {
    CHECK_THROWS_AS(SeqSpec::parse("unit"), std::invalid_argument);
    CHECK_THROWS_AS(SeqSpec::parse("unit:0"), std::invalid_argument);
    CHECK_THROWS_AS(SeqSpec::parse("powerlaw:3"), std::invalid_argument);
    CHECK_THROWS_AS(SeqSpec::parse("random:abc:4"), std::invalid_argument);
    CHECK_THROWS_AS(SeqSpec::parse("gauss:1:4"), std::invalid_argument);
    CHECK_NOTHROW(SeqSpec::parse("powerlaw:-1.5:128"));
}

TEST_CASE("validation rejects zero-mass and negative sequences") {
    Sequence zero;
    zero.values = {0.0, 0.0};
    CHECK_THROWS_AS(zero.validate(), std::invalid_argument);

    Sequence neg;
    neg.values = {1.0, -0.25};
    CHECK_THROWS_AS(neg.validate(), std::invalid_argument);

    Sequence ok;
    ok.values = {0.0, 0.5};
    CHECK_NOTHROW(ok.validate());
}
