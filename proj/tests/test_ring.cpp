#include <catch2/catch_amalgamated.hpp>

#include "ringfourier/ideals.hpp"
#include "ringfourier/ring.hpp"

#include "oracles.hpp"

using namespace ringfourier;

TEST_CASE("ring spec DSL parses the documented grammar") {
    CHECK(parse_ring_spec("zmod(6)").to_string() == "zmod(6)");
    CHECK(parse_ring_spec("  MAT( 2 , GF(3) ) ").to_string() == "mat(2,gf(3))");
    CHECK(parse_ring_spec("prod(gf(2),gf(3),zmod(4))").to_string() == "prod(gf(2),gf(3),zmod(4))");

    RingSpec g4 = parse_ring_spec("gf(4)");
    CHECK(g4.p == 2);
    CHECK(g4.k == 2);
    RingSpec g9 = parse_ring_spec("gf(3,2)");
    CHECK(g9.p == 3);
    CHECK(g9.k == 2);

    CHECK_THROWS_AS(parse_ring_spec("gf(6)"), parse_error);
    CHECK_THROWS_AS(parse_ring_spec("gf(4,2)"), parse_error);  // 4 is not prime
    CHECK_THROWS_AS(parse_ring_spec("zmod(1)"), parse_error);
    CHECK_THROWS_AS(parse_ring_spec("mat(0,gf(2))"), parse_error);
    CHECK_THROWS_AS(parse_ring_spec("prod(gf(2))"), parse_error);
    CHECK_THROWS_AS(parse_ring_spec("ring(5)"), parse_error);
    CHECK_THROWS_AS(parse_ring_spec("zmod(6)x"), parse_error);
}

TEST_CASE("gf(4) uses the unique irreducible quadratic t^2+t+1") {
    Ring g4("gf(4)");
    // exhaustive irreducibility: the modulus must divide no product of two
    // nonconstant monic linears over Z/2
    const auto& mod = g4.data().gf_modulus;  // c_0, c_1 of t^2 + c_1 t + c_0
    REQUIRE(mod.size() == 2);
    CHECK(mod[0] == 1);
    CHECK(mod[1] == 1);
    // t has index 2 (digits high-to-low (1,0)); t*t must be t+1 = index 3
    CHECK(g4.mul(2, 2) == 3);
    // field axioms by brute force: every nonzero element invertible
    for (std::uint64_t a = 1; a < 4; ++a) CHECK(oracle::is_unit_exhaustive(g4, a));
    // Frobenius is additive in characteristic 2
    for (std::uint64_t a = 0; a < 4; ++a)
        for (std::uint64_t b = 0; b < 4; ++b)
            CHECK(g4.mul(g4.add(a, b), g4.add(a, b)) == g4.add(g4.mul(a, a), g4.mul(b, b)));
}

TEST_CASE("zmod arithmetic and integer images") {
    Ring z6("zmod(6)");
    CHECK(z6.add(3, 4) == 1);
    CHECK(z6.neg(2) == 4);
    CHECK(z6.mul(4, 5) == 2);
    CHECK(z6.integer_image(0) == z6.zero());
    CHECK(z6.integer_image(-1) == 5);
    CHECK(z6.characteristic() == 6);
    // integer_image is periodic with the additive order of 1
    for (std::int64_t k = -12; k <= 12; ++k)
        CHECK(z6.integer_image(k) == z6.integer_image(k + 6));

    Ring m2("mat(2,gf(2))");
    CHECK(m2.integer_image(static_cast<std::int64_t>(m2.characteristic())) == m2.zero());
    CHECK(m2.integer_image(1) == m2.one());
}

TEST_CASE("ring axioms hold on sampled triples for the roster") {
    for (const char* spec : {"zmod(12)", "gf(8)", "gf(9)", "mat(2,gf(2))", "prod(gf(2),gf(3))"}) {
        Ring r(parse_ring_spec(spec));
        detail::Rng rng(42);
        for (int t = 0; t < 10000; ++t) {
            std::uint64_t a = rng.bounded(r.size()), b = rng.bounded(r.size()),
                          c = rng.bounded(r.size());
            CHECK(r.add(r.add(a, b), c) == r.add(a, r.add(b, c)));
            CHECK(r.mul(r.mul(a, b), c) == r.mul(a, r.mul(b, c)));
            CHECK(r.mul(a, r.add(b, c)) == r.add(r.mul(a, b), r.mul(a, c)));
            CHECK(r.mul(r.add(a, b), c) == r.add(r.mul(a, c), r.mul(b, c)));
            CHECK(r.add(a, b) == r.add(b, a));
            CHECK(r.mul(a, r.one()) == a);
            CHECK(r.mul(r.one(), a) == a);
            CHECK(r.add(a, r.neg(a)) == r.zero());
        }
    }
}

TEST_CASE("additive coordinates are an additive isomorphism") {
    for (const char* spec : {"zmod(12)", "gf(8)", "mat(2,gf(2))", "prod(gf(2),gf(3))"}) {
        Ring r(parse_ring_spec(spec));
        const auto& f = r.additive_factors();
        std::uint64_t prod = 1;
        for (auto d : f) prod *= d;
        REQUIRE(prod == r.size());
        for (auto d : f) CHECK(d >= 2);
        for (std::uint64_t a = 0; a < r.size(); ++a) {
            auto ca = r.additive_coordinates(a);
            CHECK(r.coordinates_to_element(ca) == a);
            for (std::uint64_t b = 0; b < r.size(); ++b) {
                auto cb = r.additive_coordinates(b);
                auto cs = r.additive_coordinates(r.add(a, b));
                for (std::size_t j = 0; j < f.size(); ++j)
                    CHECK(cs[j] == (ca[j] + cb[j]) % f[j]);
            }
        }
    }
    Ring z6("zmod(6)");
    CHECK(z6.additive_coordinates(4) == std::vector<std::uint32_t>{4});
    Ring g4("gf(4)");
    CHECK(g4.additive_coordinates(3) == std::vector<std::uint32_t>{1, 1});  // t + 1
    CHECK_THROWS_AS(z6.coordinates_to_element({6}), std::invalid_argument);
    CHECK_THROWS_AS(z6.coordinates_to_element({0, 0}), std::invalid_argument);
}

TEST_CASE("units: exhaustive search agrees with closed forms") {
    Ring z6("zmod(6)");
    CHECK(z6.is_unit(5));
    CHECK_FALSE(z6.is_unit(2));
    CHECK(z6.units() == std::vector<std::uint64_t>{1, 5});
    CHECK(z6.unit_count() == 2);

    Ring g9("gf(9)");
    CHECK(g9.unit_count() == 8);
    CHECK(g9.units().size() == 8);

    Ring m2("mat(2,gf(2))");
    CHECK(m2.is_unit(m2.one()));
    CHECK(m2.unit_count() == 6);  // |GL_2(F_2)| = (4-1)(4-2)
    CHECK(m2.units().size() == 6);

    // multiplicativity over products
    Ring p("prod(zmod(4),gf(3))");
    CHECK(p.unit_count() == Ring("zmod(4)").unit_count() * Ring("gf(3)").unit_count());
    CHECK(p.units().size() == p.unit_count());

    // matrix over zmod(4): |GL_2(Z/4)| = 4^{1} ... checked exhaustively
    Ring m4("mat(2,zmod(4))");
    CHECK(m4.unit_count() == m4.units().size());

    // table rings go through the exhaustive path
    Ring ut(upper_triangular_spec(RingSpec::gf(2)));
    CHECK(ut.unit_count() == ut.units().size());
}

TEST_CASE("element wrapper rejects mixed-ring operands") {
    Ring z4("zmod(4)"), z6("zmod(6)");
    Element a(z4, 3), b(z4, 2), c(z6, 2);
    CHECK((a + b).index() == 1);
    CHECK((a * b).index() == 2);
    CHECK((-a).index() == 1);
    CHECK_THROWS_AS(a + c, std::invalid_argument);
    CHECK_THROWS_AS(a == c, std::invalid_argument);
    CHECK_THROWS_AS(Element(z4, 4), std::invalid_argument);
}

TEST_CASE("quotient rings: zmod(4)/{0,2} and the trivial quotient") {
    Ring z4("zmod(4)");
    IdealSet J{Side::TwoSided, z4, {0, 2}};
    QuotientRing q = quotient_ring(z4, J);
    REQUIRE(q.ring.size() == 2);
    // the two-element unital ring is Z/2
    CHECK(q.ring.add(q.ring.one(), q.ring.one()) == q.ring.zero());
    CHECK(q.ring.mul(q.ring.one(), q.ring.one()) == q.ring.one());
    // projection is a ring homomorphism
    for (std::uint64_t a = 0; a < 4; ++a)
        for (std::uint64_t b = 0; b < 4; ++b) {
            CHECK(q.projection[z4.add(a, b)] == q.ring.add(q.projection[a], q.projection[b]));
            CHECK(q.projection[z4.mul(a, b)] == q.ring.mul(q.projection[a], q.projection[b]));
        }

    IdealSet zero{Side::TwoSided, z4, {0}};
    QuotientRing qz = quotient_ring(z4, zero);
    REQUIRE(qz.ring.size() == 4);
    for (std::uint64_t a = 0; a < 4; ++a)
        for (std::uint64_t b = 0; b < 4; ++b) {
            CHECK(qz.ring.add(a, b) == z4.add(a, b));
            CHECK(qz.ring.mul(a, b) == z4.mul(a, b));
        }

    IdealSet improper{Side::TwoSided, z4, {0, 1, 2, 3}};
    CHECK_THROWS_AS(quotient_ring(z4, improper), std::invalid_argument);

    // a one-sided ideal must be rejected: the right-column-zero left ideal
    // of mat(2,gf(2)) is not two-sided
    Ring m2("mat(2,gf(2))");
    IdealSet col = principal_ideal(m2, m2.matrix_unit(0, 0, 1), Side::Left);
    REQUIRE(col.size() == 4);
    CHECK_THROWS_AS(quotient_ring(m2, IdealSet{Side::TwoSided, m2, col.elems}),
                    std::invalid_argument);
}

TEST_CASE("upper-triangular table ring quotients to gf(2) x gf(2)") {
    Ring ut(upper_triangular_spec(RingSpec::gf(2)));
    REQUIRE(ut.size() == 8);
    // strict upper part {0, E12} is the radical
    RadicalReport rad = jacobson_radical(ut);
    REQUIRE(rad.size == 2);
    Ring q = rad.quotient.ring;
    REQUIRE(q.size() == 4);

    // table isomorphism search onto prod(gf(2),gf(2)) over all bijections
    Ring p22("prod(gf(2),gf(2))");
    std::vector<std::uint64_t> perm = {0, 1, 2, 3};
    std::sort(perm.begin(), perm.end());
    bool found = false;
    do {
        bool ok = perm[q.zero()] == p22.zero() && perm[q.one()] == p22.one();
        for (std::uint64_t a = 0; a < 4 && ok; ++a)
            for (std::uint64_t b = 0; b < 4 && ok; ++b) {
                ok = perm[q.add(a, b)] == p22.add(perm[a], perm[b]) &&
                     perm[q.mul(a, b)] == p22.mul(perm[a], perm[b]);
            }
        if (ok) found = true;
    } while (!found && std::next_permutation(perm.begin(), perm.end()));
    CHECK(found);
}

TEST_CASE("table ring validation catches broken tables") {
    TableData t;
    t.q = 2;
    t.add = {0, 1, 1, 0};
    t.mul = {0, 0, 0, 1};
    t.zero = 0;
    t.one = 1;
    CHECK_NOTHROW(Ring(RingSpec::table_ring(t)));

    TableData bad = t;
    bad.mul = {0, 0, 0, 0};  // 1*1 = 0: not an identity
    CHECK_THROWS_AS(Ring(RingSpec::table_ring(bad)), std::invalid_argument);

    TableData bad2 = t;
    bad2.add = {0, 1, 1, 1};  // addition row not a permutation
    CHECK_THROWS_AS(Ring(RingSpec::table_ring(bad2)), std::invalid_argument);
}

TEST_CASE("matrix helpers round-trip entries") {
    Ring m2("mat(2,gf(3))");
    Ring f3 = m2.base_ring();
    std::vector<std::uint64_t> entries = {1, 2, 0, 1};
    std::uint64_t a = m2.matrix_from_entries(entries);
    for (unsigned i = 0; i < 2; ++i)
        for (unsigned j = 0; j < 2; ++j) CHECK(m2.matrix_entry(a, i, j) == entries[i * 2 + j]);
    CHECK(m2.matrix_trace(a) == f3.add(1, 1));

    // multiplication matches the schoolbook 2x2 oracle
    detail::Rng rng(7);
    for (int t = 0; t < 200; ++t) {
        std::vector<std::uint64_t> ea = {rng.bounded(3), rng.bounded(3), rng.bounded(3),
                                         rng.bounded(3)};
        std::vector<std::uint64_t> eb = {rng.bounded(3), rng.bounded(3), rng.bounded(3),
                                         rng.bounded(3)};
        std::uint64_t prod = m2.mul(m2.matrix_from_entries(ea), m2.matrix_from_entries(eb));
        std::vector<std::uint64_t> expect = oracle::mat2_mul(f3, ea, eb);
        CHECK(prod == m2.matrix_from_entries(expect));
    }
}

TEST_CASE("characteristic and one are consistent across constructors") {
    CHECK(Ring("gf(27)").characteristic() == 3);
    CHECK(Ring("mat(3,gf(2))").characteristic() == 2);
    CHECK(Ring("prod(zmod(4),gf(3))").characteristic() == 12);
    Ring ut(upper_triangular_spec(RingSpec::gf(3)));
    CHECK(ut.characteristic() == 3);
    // 1 != 0 everywhere
    for (const char* spec : {"zmod(2)", "gf(2)", "mat(1,gf(2))"})
        CHECK(Ring(parse_ring_spec(spec)).one() != Ring(parse_ring_spec(spec)).zero());
}
