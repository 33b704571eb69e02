#include <catch2/catch_amalgamated.hpp>

#include "ringfourier/character.hpp"

#include "oracles.hpp"

using namespace ringfourier;

namespace {

std::vector<std::uint64_t> point_from_index(const Ring& r, unsigned d, std::uint64_t idx) {
    std::vector<std::uint64_t> p(d);
    for (unsigned i = d; i-- > 0;) {
        p[i] = idx % r.size();
        idx /= r.size();
    }
    return p;
}

std::vector<std::uint64_t> add_points(const Ring& r, const std::vector<std::uint64_t>& a,
                                      const std::vector<std::uint64_t>& b) {
    std::vector<std::uint64_t> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = r.add(a[i], b[i]);
    return out;
}

} // namespace

TEST_CASE("trivial character is identically one") {
    Ring r("zmod(6)");
    FrequencySpace space(r, 2);
    for (std::uint64_t i = 0; i < 36; ++i) {
        auto p = point_from_index(r, 2, i);
        CHECK(std::abs(space.character_value(0, p) - std::complex<double>(1, 0)) < 1e-12);
    }
}

TEST_CASE("half-period character value on zmod(4)") {
    Ring r("zmod(4)");
    FrequencySpace space(r, 1);
    std::vector<std::uint64_t> p = {2};
    CHECK(std::abs(space.character_value(1, p) - std::complex<double>(-1, 0)) < 1e-12);
}

TEST_CASE("character values have unit modulus") {
    for (const char* spec : {"zmod(12)", "gf(9)", "mat(2,gf(2))"}) {
        Ring r(parse_ring_spec(spec));
        FrequencySpace space(r, 1);
        detail::Rng rng(3);
        for (int t = 0; t < 500; ++t) {
            std::vector<std::uint64_t> p = {rng.bounded(r.size())};
            double m = std::abs(space.character_value(rng.bounded(space.size()), p));
            CHECK(std::abs(m - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("orthogonality: nontrivial characters sum to zero over the group") {
    for (const char* spec : {"zmod(6)", "gf(9)", "mat(2,gf(2))", "prod(gf(2),gf(3))"}) {
        Ring r(parse_ring_spec(spec));
        for (unsigned d : {1u, 2u}) {
            FrequencySpace space(r, d);
            if (space.size() > 100000 || space.size() * space.size() > 10000000) continue;
            for (Frequency f = 1; f < space.size(); ++f) {
                std::complex<double> acc = 0;
                for (std::uint64_t i = 0; i < space.size(); ++i)
                    acc += space.character_value(f, point_from_index(r, d, i));
                CHECK(std::abs(acc) <= 1e-9 * static_cast<double>(space.size()));
            }
        }
    }
    // table rings get their characters from the computed decomposition
    Ring ut(upper_triangular_spec(RingSpec::gf(2)));
    FrequencySpace space(ut, 1);
    for (Frequency f = 1; f < space.size(); ++f) {
        std::complex<double> acc = 0;
        for (std::uint64_t i = 0; i < 8; ++i) acc += space.character_value(f, {i});
        CHECK(std::abs(acc) <= 1e-9 * 8);
    }
}

TEST_CASE("multiplicativity in the point argument") {
    for (const char* spec : {"zmod(12)", "gf(8)", "mat(2,gf(3))"}) {
        Ring r(parse_ring_spec(spec));
        FrequencySpace space(r, 2);
        detail::Rng rng(11);
        for (int t = 0; t < 10000; ++t) {
            Frequency f = rng.bounded(space.size());
            auto x = point_from_index(r, 2, rng.bounded(space.size()));
            auto y = point_from_index(r, 2, rng.bounded(space.size()));
            std::complex<double> lhs = space.character_value(f, add_points(r, x, y));
            std::complex<double> rhs = space.character_value(f, x) * space.character_value(f, y);
            CHECK(std::abs(lhs - rhs) < 1e-12);
        }
    }
}

TEST_CASE("separation: distinct points are distinguished by some frequency") {
    // literal pairwise form on a small space
    {
        Ring r("zmod(6)");
        FrequencySpace space(r, 1);
        for (std::uint64_t x = 0; x < 6; ++x)
            for (std::uint64_t y = x + 1; y < 6; ++y) {
                bool separated = false;
                for (Frequency f = 0; f < 6 && !separated; ++f)
                    separated = std::abs(space.character_value(f, {x}) -
                                         space.character_value(f, {y})) > 1e-9;
                CHECK(separated);
            }
    }
    // reduced form psi(z) != 1 for z != 0, up to |R|^d = 4096
    for (const char* spec : {"zmod(8)", "gf(16)", "mat(2,gf(2))", "prod(gf(2),gf(3))"}) {
        Ring r(parse_ring_spec(spec));
        unsigned d = 2;
        FrequencySpace space(r, d);
        if (space.size() > 4096) continue;
        for (std::uint64_t i = 1; i < space.size(); ++i) {
            auto z = point_from_index(r, d, i);
            bool separated = false;
            for (Frequency f = 0; f < space.size() && !separated; ++f)
                separated = std::abs(space.character_value(f, z) - std::complex<double>(1, 0)) > 1e-9;
            CHECK(separated);
        }
    }
}

TEST_CASE("trace frequencies match the Frobenius-sum trace oracle") {
    for (const char* spec : {"gf(4)", "gf(9)", "gf(27)"}) {
        Ring f(parse_ring_spec(spec));
        const std::uint64_t p = f.characteristic();
        FrequencySpace space(f, 1);
        const double tau = 8.0 * std::atan(1.0);
        for (std::uint64_t b = 0; b < f.size(); ++b) {
            Frequency fr = space.trace_frequency({b});
            for (std::uint64_t x = 0; x < f.size(); ++x) {
                std::uint64_t tr = oracle::frobenius_trace(f, f.mul(b, x));
                REQUIRE(tr < p);  // trace lands in the prime subfield
                std::complex<double> expect =
                    std::polar(1.0, tau * static_cast<double>(tr) / static_cast<double>(p));
                CHECK(std::abs(space.character_value(fr, {x}) - expect) < 1e-12);
            }
        }
    }
}

TEST_CASE("gf(9) characters equal exp(2 pi i Tr(bx)/3) via y + y^3") {
    Ring f("gf(9)");
    // independent trace: Tr(y) = y + y^3 over gf(9)
    for (std::uint64_t y = 0; y < 9; ++y) {
        std::uint64_t y3 = f.mul(f.mul(y, y), y);
        CHECK(oracle::frobenius_trace(f, y) == f.add(y, y3));
    }
}

TEST_CASE("trace_frequency basics and injectivity") {
    Ring z6("zmod(6)");
    FrequencySpace s1(z6, 1);
    CHECK(s1.trace_frequency({0}) == 0);
    CHECK(s1.trace_frequency({1}) == 1);  // generating character

    for (const char* spec : {"zmod(12)", "gf(16)", "mat(2,gf(3))", "prod(gf(2),zmod(9))"}) {
        Ring r(parse_ring_spec(spec));
        FrequencySpace space(r, 1);
        std::vector<Frequency> seen;
        for (std::uint64_t b = 0; b < r.size(); ++b) seen.push_back(space.trace_frequency({b}));
        std::sort(seen.begin(), seen.end());
        CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
    }

    Ring ut(upper_triangular_spec(RingSpec::gf(2)));
    FrequencySpace space(ut, 1);
    CHECK_THROWS_AS(space.trace_frequency({ut.one()}), std::invalid_argument);
}

TEST_CASE("matrix trace frequency pairs against the (1,1) entry") {
    Ring m("mat(2,gf(3))");
    FrequencySpace space(m, 1);
    std::uint64_t e11 = m.matrix_unit(0, 0, 1);
    Frequency fr = space.trace_frequency({e11});
    const double tau = 8.0 * std::atan(1.0);
    for (std::uint64_t c = 0; c < m.size(); ++c) {
        double ang = tau * static_cast<double>(m.matrix_entry(c, 0, 0)) / 3.0;
        CHECK(std::abs(space.character_value(fr, {c}) - std::polar(1.0, ang)) < 1e-12);
    }
}

TEST_CASE("frequency serialization and enumeration") {
    Ring z6("zmod(6)");
    FrequencySpace s(z6, 3);
    CHECK(s.to_string(0) == "0|0|0");
    std::uint32_t dig[3] = {2, 1, 0};
    CHECK(s.to_string(s.compose(dig)) == "2|1|0");

    Ring g4("gf(4)");
    FrequencySpace s2(g4, 2);
    std::uint32_t dig2[4] = {1, 0, 0, 1};
    CHECK(s2.to_string(s2.compose(dig2)) == "1,0|0,1");

    auto freqs = s2.enumerate_frequencies();
    REQUIRE(freqs.size() == 16);
    CHECK(freqs.front() == 0);

    Ring m2("mat(2,gf(2))");
    FrequencySpace s3(m2, 1);
    CHECK(s3.enumerate_frequencies().size() == 16);

    Budget tiny;
    tiny.work = 4;
    CHECK_THROWS_AS(s2.enumerate_frequencies(tiny), budget_error);
}

TEST_CASE("dimension mismatch is rejected") {
    Ring r("zmod(4)");
    FrequencySpace s(r, 2);
    CHECK_THROWS_AS(s.character_value(0, std::vector<std::uint64_t>{1}), std::invalid_argument);
    CHECK_THROWS_AS(s.trace_frequency({1}), std::invalid_argument);
}
