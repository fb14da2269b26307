#include <doctest.h>

#include "support.hpp"

using namespace grc;
using test::random_element;

TEST_CASE("addition and scalar multiplication") {
    const GroupRing r = test::ring(5, "6x6");
    const auto u = r.parse(test::kU36);
    CHECK((u + r.zero()) == u);
    CHECK((u + Symbol{4} * u).is_zero());
    CHECK((u + FieldElement(r.field(), 4) * u).is_zero());
    std::mt19937_64 rng(1);
    for (int i = 0; i < 50; ++i) {
        const auto x = random_element(rng, r), y = random_element(rng, r);
        CHECK((x + y) == (y + x));
    }
}

TEST_CASE("check element annihilates the generator") {
    const GroupRing r = test::ring(5, "6x6");
    CHECK((r.parse(test::kU36) * r.parse(test::kV36)).is_zero());
    const auto u = r.parse(test::kU36);
    CHECK((r.one() * u) == u);
}

TEST_CASE("(1 - g) annihilates the all-ones element") {
    const GroupRing r = test::ring(4, "3x6");
    const auto s = r.all_ones();
    for (int g = 2; g <= r.size(); ++g) CHECK(((r.one() - r.group_element(g)) * s).is_zero());
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(7);
    for (auto [q, g] : {std::pair{2, "5x5"}, {3, "4x8"}, {4, "3x6"}, {5, "6x6"}, {5, "2x10"}}) {
        const GroupRing r = test::ring(q, g);
        for (int i = 0; i < 10; ++i) {
            const auto x = random_element(rng, r), y = random_element(rng, r), z = random_element(rng, r);
            CHECK(((x * y) * z) == (x * (y * z)));
            CHECK((x * (y + z)) == (x * y + x * z));
            CHECK((x * y) == (y * x));
        }
    }
}

TEST_CASE("involution") {
    const GroupRing r = test::ring(3, "4x8");
    CHECK(involution(r.all_ones()) == r.all_ones());
    const auto c = Symbol{2} * r.one();
    CHECK(involution(c) == c);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 30; ++i) {
        const auto x = random_element(rng, r), y = random_element(rng, r);
        CHECK(involution(x * y) == involution(x) * involution(y));
        CHECK(involution(x + y) == involution(x) + involution(y));
        CHECK(involution(involution(x)) == x);
    }
}

TEST_CASE("reversal is g_n times the involution") {
    const GroupRing r = test::ring(2, "5x5");
    const auto gn = r.group_element(r.size());
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        const auto w = random_element(rng, r);
        CHECK(reverse(w) == gn * involution(w));
        CHECK(reverse(reverse(w)) == w);
    }
    const auto pal = r.parse("1000000000001000000000001");
    CHECK(reverse(pal) == pal);
}

TEST_CASE("regular matrix") {
    const GroupRing r = test::ring(5, "2x10");
    CHECK(regular_matrix(r.one()) == Matrix::identity(r.field(), r.size()));
    const Matrix all = regular_matrix(r.all_ones());
    CHECK(std::all_of(all.entries().begin(), all.entries().end(), [](Symbol s) { return s == 1; }));
    std::mt19937_64 rng(5);
    for (int i = 0; i < 30; ++i) {
        const auto w = random_element(rng, r), u = random_element(rng, r);
        const auto wu = w * u;
        CHECK(vec_mul(w.coeffs(), regular_matrix(u)) == std::vector<Symbol>(wu.coeffs().begin(), wu.coeffs().end()));
    }
}

TEST_CASE("units and zero-divisors") {
    const GroupRing r = test::ring(2, "2x2");
    CHECK(is_unit(r.one()));
    CHECK_FALSE(is_zero_divisor(r.zero()));
    // Definition oracle: u is a unit iff u b = 1 for some b.
    std::vector<GroupRingElement> all;
    for (int m = 0; m < 16; ++m) {
        std::vector<Symbol> c(4);
        for (int i = 0; i < 4; ++i) c[i] = (m >> i) & 1;
        all.push_back(r.element(c));
    }
    for (const auto& u : all) {
        bool unit = false;
        for (const auto& b : all) unit = unit || (u * b) == r.one();
        CHECK(is_unit(u) == unit);
        CHECK(is_zero_divisor(u) == (!unit && !u.is_zero()));
    }
    for (auto [q, g] : {std::pair{2, "5x5"}, {5, "6x6"}, {3, "2"}, {4, "3x6"}})
        CHECK(is_zero_divisor(test::ring(q, g).all_ones()));
}

TEST_CASE("parsing elements") {
    const GroupRing r = test::ring(5, "6x6");
    CHECK_THROWS_AS(r.parse("0123"), std::invalid_argument);
    CHECK(r.parse(test::kU36).to_string() == test::kU36);
    CHECK(r.group_element(1) == r.one());
    CHECK_THROWS(r.group_element(37));
    CHECK_THROWS_AS(r.one() * test::ring(5, "3x6").one(), std::invalid_argument);
}
