#include <doctest.h>

#include <map>
#include <set>

#include "core/double_cover.hpp"
#include "test_util.hpp"

using namespace bipdisc;

namespace {

// Checks the lifted cycles are 2-regular on exactly 2m vertices and that
// every edge covers a source edge {k, k+1 mod m} across layers.
void check_cover_structure(int m, const LiftedCycles& lift) {
    std::set<std::pair<int, int>> seen;
    int edges = 0;
    for (const auto& cyc : lift.cycles) {
        for (std::size_t t = 0; t < cyc.size(); t++) {
            auto [v, layer] = cyc[t];
            auto [w, layer2] = cyc[(t + 1) % cyc.size()];
            CHECK(layer != layer2);
            int d = (w - v + m) % m;
            CHECK((d == 1 || d == m - 1));
            edges++;
            CHECK(seen.insert(cyc[t]).second);  // vertex appears once
        }
    }
    CHECK(edges == 2 * m);
    CHECK(seen.size() == static_cast<std::size_t>(2 * m));
}

}  // namespace

TEST_CASE("double cover of small cycles") {
    auto c3 = double_cover_cycle(3);
    REQUIRE(c3.cycles.size() == 1);
    CHECK(c3.cycles[0].size() == 6);

    auto c4 = double_cover_cycle(4);
    REQUIRE(c4.cycles.size() == 2);
    CHECK(c4.cycles[0].size() == 4);
    CHECK(c4.cycles[1].size() == 4);

    auto c5 = double_cover_cycle(5);
    REQUIRE(c5.cycles.size() == 1);
    CHECK(c5.cycles[0].size() == 10);

    CHECK_THROWS_AS(double_cover_cycle(2), std::invalid_argument);
}

TEST_CASE("double cover across the full range") {
    for (int m = 3; m <= 99; m += 2) {
        auto lift = double_cover_cycle(m);
        REQUIRE(lift.cycles.size() == 1);
        CHECK(lift.cycles[0].size() == static_cast<std::size_t>(2 * m));
        check_cover_structure(m, lift);
    }
    for (int m = 4; m <= 100; m += 2) {
        auto lift = double_cover_cycle(m);
        REQUIRE(lift.cycles.size() == 2);
        CHECK(lift.cycles[0].size() == static_cast<std::size_t>(m));
        CHECK(lift.cycles[1].size() == static_cast<std::size_t>(m));
        check_cover_structure(m, lift);
    }
}

TEST_CASE("lifting the triangle decomposition of K_3") {
    std::vector<KnFactor> k3 = {{{0, 1, 2}}};
    auto tf = lift_two_factorization(k3, 3);
    REQUIRE(tf.factors.size() == 1);
    REQUIRE(tf.factors[0].cycles.size() == 1);
    CHECK(tf.factors[0].cycles[0].half_length() == 3);  // a C6
    std::string why;
    CHECK(is_two_factorization(tf, 3, &why));
    for (auto [i, j] : tf.factors[0].edges()) CHECK(i != j);
}

TEST_CASE("lifting a Hamilton decomposition of K_5") {
    std::vector<KnFactor> k5 = {{{0, 1, 2, 3, 4}}, {{0, 2, 4, 1, 3}}};
    auto tf = lift_two_factorization(k5, 5);
    REQUIRE(tf.factors.size() == 2);
    for (const auto& f : tf.factors) {
        REQUIRE(f.cycles.size() == 1);
        CHECK(f.cycles[0].half_length() == 5);  // each lifts to a C10
    }
    std::string why;
    CHECK(is_two_factorization(tf, 5, &why));
}

TEST_CASE("C4 components double under the lift") {
    // K_5 does not decompose with a C4; use a synthetic host: two factors on
    // 8 vertices, one containing a C4 and a C4 (cube-ish), built by hand.
    // Simpler: check the single-cycle lift rule directly.
    auto lift = double_cover_cycle(4);
    CHECK(lift.cycles.size() == 2);  // C4 -> 2 C4
    auto lift6 = double_cover_cycle(6);
    CHECK(lift6.cycles.size() == 2);  // C6 -> 2 C6
}

TEST_CASE("invalid source decompositions are rejected") {
    std::vector<KnFactor> missing = {{{0, 1, 2}}};
    CHECK_THROWS_AS(lift_two_factorization(missing, 5), std::invalid_argument);

    std::vector<KnFactor> repeated = {{{0, 1, 2}}, {{0, 1, 2}}};
    CHECK_THROWS_AS(lift_two_factorization(repeated, 3), std::invalid_argument);
}
