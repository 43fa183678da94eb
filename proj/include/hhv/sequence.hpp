#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hhv {

// Finite nonnegative sequence a_1..a_N (values[0] is a_1). Finite inputs
// stand for infinite sequences padded with zeros.
struct Sequence {
    std::vector<double> values;
    std::string label = "custom";

    std::size_t size() const { return values.size(); }

    // The series hypotheses need a nonnegative sequence with some mass.
    void validate() const {
        if (values.empty())
            throw std::invalid_argument("Sequence '" + label + "' is empty");
        bool any_positive = false;
        for (double v : values) {
            if (!(v >= 0.0) || !std::isfinite(v))
                throw std::invalid_argument("Sequence '" + label +
                                            "' has a negative or non-finite entry");
            any_positive = any_positive || v > 0.0;
        }
        if (!any_positive)
            throw std::invalid_argument("Sequence '" + label + "' is identically zero");
    }
};

namespace detail {

// SplitMix64 output for the i-th position (0-based), used as a counter-based
// generator: stateless in i, identical on every platform.
inline std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t i) {
    std::uint64_t z = seed + (i + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline double uniform_unit(std::uint64_t u) {
    return static_cast<double>(u >> 11) * 0x1.0p-53;
}

} // namespace detail

enum class SeqKind { unit_prefix, powerlaw, random_uniform, file };

// Sequence recipe. Text syntax (as accepted by parse):
//   unit:N  powerlaw:t:N  random:seed:N  file:path
struct SeqSpec {
    SeqKind kind = SeqKind::unit_prefix;
    double exponent = 0.0;     // powerlaw: a_n = n^exponent
    std::uint64_t seed = 0;    // random
    std::size_t length = 1;
    std::string path;          // file

    static SeqSpec parse(std::string_view text);
    std::string to_string() const;
};

namespace detail {

inline std::invalid_argument bad_spec(std::string_view text) {
    return std::invalid_argument("bad sequence spec '" + std::string(text) +
                                 "' (expected unit:N, powerlaw:t:N, random:seed:N, file:path)");
}

template <typename T>
T parse_number(std::string_view s, std::string_view whole) {
    T value{};
    const auto* first = s.data();
    const auto* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
        throw bad_spec(whole);
    return value;
}

} // namespace detail

inline SeqSpec SeqSpec::parse(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw detail::bad_spec(text);
    const std::string_view head = text.substr(0, colon);
    const std::string_view rest = text.substr(colon + 1);

    SeqSpec spec;
    if (head == "unit") {
        spec.kind = SeqKind::unit_prefix;
        spec.length = detail::parse_number<std::size_t>(rest, text);
    } else if (head == "powerlaw") {
        const auto c2 = rest.find(':');
        if (c2 == std::string_view::npos)
            throw detail::bad_spec(text);
        spec.kind = SeqKind::powerlaw;
        spec.exponent = detail::parse_number<double>(rest.substr(0, c2), text);
        spec.length = detail::parse_number<std::size_t>(rest.substr(c2 + 1), text);
    } else if (head == "random") {
        const auto c2 = rest.find(':');
        if (c2 == std::string_view::npos)
            throw detail::bad_spec(text);
        spec.kind = SeqKind::random_uniform;
        spec.seed = detail::parse_number<std::uint64_t>(rest.substr(0, c2), text);
        spec.length = detail::parse_number<std::size_t>(rest.substr(c2 + 1), text);
    } else if (head == "file") {
        spec.kind = SeqKind::file;
        spec.path = std::string(rest);
        spec.length = 1; // established on load
    } else {
        throw detail::bad_spec(text);
    }
    if (spec.kind != SeqKind::file && spec.length < 1)
        throw detail::bad_spec(text);
    return spec;
}

inline std::string SeqSpec::to_string() const {
    switch (kind) {
    case SeqKind::unit_prefix: return "unit:" + std::to_string(length);
    case SeqKind::powerlaw: {
        char buf[64];
        std::snprintf(buf, sizeof buf, "powerlaw:%g:%zu", exponent, length);
        return buf;
    }
    case SeqKind::random_uniform:
        return "random:" + std::to_string(seed) + ":" + std::to_string(length);
    case SeqKind::file: return "file:" + path;
    }
    return "custom";
}

namespace detail {

// One nonnegative decimal per line; blank lines and '#' comments allowed.
inline Sequence load_sequence_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open sequence file '" + path + "'");
    Sequence seq;
    seq.label = "file:" + path;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        const auto begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos)
            continue;
        const auto end = line.find_last_not_of(" \t\r");
        const std::string_view tok(line.data() + begin, end - begin + 1);
        double v{};
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": not a number: '" + std::string(tok) + "'");
        if (!(v >= 0.0) || !std::isfinite(v))
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": negative or non-finite entry");
        seq.values.push_back(v);
    }
    if (seq.values.empty())
        throw std::runtime_error(path + ": no entries");
    return seq;
}

} // namespace detail

// Deterministic: the same spec yields the bit-identical sequence everywhere.
inline Sequence generate(const SeqSpec& spec) {
    Sequence seq;
    seq.label = spec.to_string();
    switch (spec.kind) {
    case SeqKind::unit_prefix:
        seq.values.assign(spec.length, 1.0);
        break;
    case SeqKind::powerlaw:
        seq.values.reserve(spec.length);
        for (std::size_t n = 1; n <= spec.length; ++n)
            seq.values.push_back(std::pow(static_cast<double>(n), spec.exponent));
        break;
    case SeqKind::random_uniform:
        seq.values.reserve(spec.length);
        for (std::size_t i = 0; i < spec.length; ++i)
            seq.values.push_back(
                detail::uniform_unit(detail::splitmix64_at(spec.seed, i)));
        break;
    case SeqKind::file:
        seq = detail::load_sequence_file(spec.path);
        break;
    }
    seq.validate();
    return seq;
}

} // namespace hhv
