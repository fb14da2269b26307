#include <doctest.h>

#include <numeric>

#include "support.hpp"

using namespace grc;

namespace {
LinearCode c36() {
    const GroupRing r = test::ring(5, "6x6");
    return code_from_generator_element(r.parse(test::kU36)).with_check_element(r.parse(test::kV36));
}
}  // namespace

TEST_CASE("codes from generator elements") {
    CHECK(c36().label() == "[36,28]");
    const GroupRing r = test::ring(3, "2x5");
    const LinearCode rep = code_from_generator_element(r.all_ones());
    CHECK(rep.dimension() == 1);
    CHECK(rep.contains(std::vector<Symbol>(10, 2)));
    CHECK(code_from_generator_element(r.one()) == LinearCode::full(r.field(), 10));
    CHECK_THROWS_AS(code_from_generator_element(r.zero()), std::invalid_argument);
}

TEST_CASE("submodule codes") {
    const GroupRing r = test::ring(5, "6x6");
    std::vector<int> all(36);
    std::iota(all.begin(), all.end(), 1);
    // All of G gives independent translates only for a unit.
    const auto unit = Symbol{2} * r.one() + r.group_element(2);
    REQUIRE(is_unit(unit));
    const auto whole = code_from_submodule(unit, all);
    CHECK(whole.code == code_from_generator_element(unit));
    CHECK(whole.is_ideal);

    const auto u = r.parse(test::kU36);
    CHECK_THROWS_AS(code_from_submodule(u, all), std::invalid_argument);
    CHECK_THROWS_AS(code_from_submodule(u, std::vector<int>{}), std::invalid_argument);

    // Pivot rows of U^T pick independent translates g_i u.
    const auto piv = rref(regular_matrix(u).transpose()).pivots;
    std::vector<int> s(piv.begin(), piv.end());
    for (auto& i : s) ++i;
    const auto ideal = code_from_submodule(u, s);
    CHECK(ideal.is_ideal);
    CHECK(ideal.code == c36());
    s.pop_back();
    const auto part = code_from_submodule(u, s);
    CHECK_FALSE(part.is_ideal);
    CHECK(part.code.dimension() == 27);
}

TEST_CASE("annihilator codes") {
    const GroupRing r = test::ring(5, "6x6");
    CHECK(annihilator_code(r.parse(test::kV36)) == c36());
    CHECK(annihilator_code(r.zero()) == LinearCode::full(r.field(), 36));
    CHECK(annihilator_code(r.one()).dimension() == 0);
}

TEST_CASE("parity-check matrices") {
    const GroupRing r = test::ring(3, "2x5");
    const LinearCode rep = code_from_generator_element(r.all_ones());
    const Matrix h = parity_check_matrix(rep);
    CHECK(h.rows() == 9);
    CHECK(rank(h) == 9);
    CHECK((rep.generator_matrix() * h.transpose()).is_zero());

    const LinearCode c = c36();
    const Matrix h36 = parity_check_matrix(c);
    CHECK(rank(h36) == 8);
    CHECK((c.generator_matrix() * h36.transpose()).is_zero());

    std::mt19937_64 rng(12);
    for (int q : {2, 3, 4, 5}) {
        for (int t = 0; t < 10; ++t) {
            const LinearCode x(test::random_matrix(rng, Field::of_order(q), 1 + t % 6, 11));
            const Matrix hx = parity_check_matrix(x);
            CHECK((x.generator_matrix() * hx.transpose()).is_zero());
            CHECK(rank(hx) + x.dimension() == 11);
        }
    }
}

TEST_CASE("duals") {
    const GroupRing r = test::ring(5, "6x6");
    const LinearCode d = dual_code(c36());
    CHECK(d.dimension() == 8);
    CHECK(d == code_from_generator_element(involution(r.parse(test::kV36))));
    CHECK(dual_code(LinearCode::full(r.field(), 7)) == LinearCode::zero(r.field(), 7));
    std::mt19937_64 rng(13);
    for (int q : {2, 3, 4, 5})
        for (int t = 0; t < 10; ++t) {
            const LinearCode x(test::random_matrix(rng, Field::of_order(q), 1 + t % 7, 12));
            CHECK(dual_code(dual_code(x)) == x);
        }
}

TEST_CASE("shortening") {
    const LinearCode c = c36();
    CHECK(shorten(c, std::vector<int>{1}).label() == "[35,27]");
    CHECK(shorten(c, std::vector<int>{1, 2}).label() == "[34,26]");
    CHECK(shorten(c, std::vector<int>{}) == c);
    CHECK_THROWS(shorten(c, std::vector<int>{0}));
    CHECK_THROWS(shorten(c, std::vector<int>{37}));
    // k drops by at most the number of positions.
    std::mt19937_64 rng(21);
    for (int t = 0; t < 20; ++t) {
        const LinearCode x(test::random_matrix(rng, Field::of_order(3), 5, 10));
        const std::vector<int> pos = {1 + t % 10, 1 + (t * 3 + 1) % 10};
        const int removed = pos[0] == pos[1] ? 1 : 2;
        const LinearCode s = shorten(x, pos);
        CHECK(s.length() == 10 - removed);
        CHECK(s.dimension() >= x.dimension() - removed);
        CHECK(s.dimension() <= x.dimension());
    }
}

TEST_CASE("standard generator matrices match the printed ones") {
    const Field f = Field::of_order(5);
    const auto g36 = test::read_matrix_rows(test::kDataDir + "/g36_standard.txt");
    const Matrix printed36 = Matrix::parse_rows(f, g36);
    const Matrix ours36 = standard_generator_matrix(c36());
    CHECK(row_space_equal(printed36, ours36));
    // Entrywise agreement is informational only.
    MESSAGE("G36 entrywise equal: " << (printed36 == ours36));

    const GroupRing r = test::ring(5, "6x12");
    const LinearCode c72 = code_from_generator_element(r.parse(test::kU72));
    const Matrix printed72 = Matrix::parse_rows(f, test::read_matrix_rows(test::kDataDir + "/g72_standard.txt"));
    CHECK(row_space_equal(printed72, standard_generator_matrix(c72)));
    MESSAGE("G72 entrywise equal: " << (printed72 == standard_generator_matrix(c72)));

    CHECK(standard_generator_matrix(code_from_generator_element(r.one())) == Matrix::identity(f, 72));
}

TEST_CASE("ideals are closed under the group action") {
    const GroupRing r = test::ring(4, "3x6");
    std::mt19937_64 rng(17);
    for (int t = 0; t < 5; ++t) {
        const auto u = test::random_element(rng, r);
        if (u.is_zero()) continue;
        const LinearCode c = code_from_generator_element(u);
        const Matrix& g = c.generator_matrix();
        for (int h = 1; h <= r.size(); ++h)
            for (int i = 0; i < g.rows(); ++i) {
                const auto w = r.group_element(h) * r.element({g.row(i).begin(), g.row(i).end()});
                CHECK(c.contains(w.coeffs()));
            }
    }
}

TEST_CASE("code sizes") {
    const LinearCode c = c36();
    const GroupRing r = test::ring(5, "6x6");
    const auto v = r.parse(test::kV36);
    CHECK(code_cardinality(c) == CodeSize{5, 28});
    CHECK(ambient_cardinality(c.field(), 36) == code_cardinality(c) * code_cardinality(code_from_generator_element(v)));
    CHECK(code_cardinality(code_from_generator_element(involution(v))) == CodeSize{5, 8});
    CHECK(code_cardinality(LinearCode::zero(c.field(), 4)).to_string() == "1");
    CHECK(CodeSize{5, 3}.to_string() == "125");
    CHECK_THROWS(CodeSize{5, 3} * CodeSize{2, 1});

    // Every checkable pair in GF(2)C6.
    const GroupRing s = test::ring(2, "6");
    int pairs = 0;
    for (int a = 1; a < 64; ++a) {
        std::vector<Symbol> cu(6);
        for (int i = 0; i < 6; ++i) cu[i] = (a >> i) & 1;
        const auto u = s.element(cu);
        for (int b = 0; b < 64; ++b) {
            std::vector<Symbol> cv(6);
            for (int i = 0; i < 6; ++i) cv[i] = (b >> i) & 1;
            const auto w = s.element(cv);
            if (!verify_check_element(u, w).valid()) continue;
            ++pairs;
            const LinearCode cu_code = code_from_generator_element(u);
            CHECK(ambient_cardinality(s.field(), 6) == code_cardinality(cu_code) * code_cardinality(LinearCode(regular_matrix(w))));
            CHECK(code_cardinality(cu_code) == code_cardinality(code_from_generator_element(involution(u))));
        }
    }
    CHECK(pairs > 0);
}
