#include <doctest.h>

#include "core/sign_matrix.hpp"
#include "test_util.hpp"

using namespace bipdisc;
using testutil::make_signing;
using testutil::random_signing;
using testutil::shift_matching;

TEST_CASE("signed sum over a matching") {
    SignMatrix all_plus(3, +1);
    CHECK(signed_sum(all_plus, PerfectMatching::identity(3)) == 3);

    auto m = make_signing({"+-", "-+"});
    CHECK(signed_sum(m, PerfectMatching::identity(2)) == 2);
    PerfectMatching swap;
    swap.map = {1, 0};
    CHECK(signed_sum(m, swap) == -2);

    PerfectMatching wrong;
    wrong.map = {0, 1, 2};
    CHECK_THROWS_AS(signed_sum(m, wrong), std::invalid_argument);
}

TEST_CASE("matching discrepancy") {
    SignMatrix all_plus(4, +1);
    CHECK(disc_matching(all_plus, PerfectMatching::identity(4)) == Rat(1));

    auto even = testutil::balanced_one_sided(4, true);
    auto odd = testutil::balanced_one_sided(5, true);
    for (int t = 0; t < 4; t++) CHECK(disc_matching(even, shift_matching(4, t)) == Rat(0));
    for (int t = 0; t < 5; t++) CHECK(disc_matching(odd, shift_matching(5, t)) == Rat(1, 5));
}

TEST_CASE("graph discrepancy") {
    CHECK(disc_graph(SignMatrix(6, +1)) == Rat(1));
    auto half = make_signing({"++--", "++--", "++--", "++--"});
    CHECK(disc_graph(half) == Rat(0));
    CHECK(disc_graph(make_signing({"++", "+-"})) == Rat(1, 2));
}

TEST_CASE("signed sum parity and range") {
    for (std::uint64_t seed = 0; seed < 40; seed++) {
        int n = 2 + static_cast<int>(seed % 9);
        auto m = random_signing(n, seed);
        Rng rng(seed + 999);
        PerfectMatching pm;
        pm.map = rng.permutation(n);
        long long s = signed_sum(m, pm);
        CHECK(std::abs(s) <= n);
        CHECK(((s % 2) + 2) % 2 == n % 2);
    }
}

TEST_CASE("edge partition conserves the total sum") {
    for (std::uint64_t seed = 0; seed < 20; seed++) {
        int n = 3 + static_cast<int>(seed % 6);
        auto m = random_signing(n, seed * 7 + 1);
        OneFactorization f;
        for (int t = 0; t < n; t++) f.matchings.push_back(shift_matching(n, t));
        REQUIRE(validate_factorization(f).valid);
        long long total = 0;
        for (const auto& pm : f.matchings) total += signed_sum(m, pm);
        CHECK(total == m.total_sum());
        long long abs_total = std::llabs(total);
        CHECK(disc_graph(m) == Rat(abs_total, static_cast<long long>(n) * n));
    }
}

TEST_CASE("factorization validation") {
    OneFactorization cyclic;
    for (int t = 0; t < 4; t++) cyclic.matchings.push_back(shift_matching(4, t));
    CHECK(validate_factorization(cyclic).valid);

    OneFactorization dup;
    dup.matchings = {shift_matching(3, 0), shift_matching(3, 0), shift_matching(3, 1)};
    auto rep = validate_factorization(dup);
    CHECK_FALSE(rep.valid);
    CHECK(rep.kind == ValidationReport::Kind::duplicate_edge);
    CHECK(rep.matching_index == 1);

    OneFactorization bad;
    bad.matchings = {shift_matching(3, 0), shift_matching(3, 1), shift_matching(3, 2)};
    bad.matchings[2].map = {0, 0, 2};
    rep = validate_factorization(bad);
    CHECK_FALSE(rep.valid);
    CHECK(rep.kind == ValidationReport::Kind::not_bijection);
    CHECK(rep.matching_index == 2);
    CHECK(rep.column_index == 1);
}

TEST_CASE("signing file round trip") {
    for (std::uint64_t seed = 0; seed < 50; seed++) {
        int n = 1 + static_cast<int>(seed % 12);
        auto m = random_signing(n, seed * 13 + 5);
        std::string text = serialize_signing(m);
        auto back = parse_signing(text);
        CHECK(back == m);
        CHECK(serialize_signing(back) == text);
    }
}

TEST_CASE("factorization file round trip") {
    OneFactorization f;
    for (int t = 0; t < 5; t++) f.matchings.push_back(shift_matching(5, (2 * t) % 5));
    std::string text = serialize_factorization(f);
    auto back = parse_factorization(text);
    REQUIRE(back.n() == 5);
    for (int t = 0; t < 5; t++) CHECK(back.matchings[t] == f.matchings[t]);
    CHECK(serialize_factorization(back) == text);
}

TEST_CASE("parse errors carry locations") {
    try {
        parse_signing("3\n++-\n+*-\n---\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
        CHECK(e.column == 2);
    }
    CHECK_THROWS_AS(parse_signing("2\n++\n"), ParseError);
    CHECK_THROWS_AS(parse_signing(""), ParseError);
    CHECK_THROWS_AS(parse_signing("x\n"), ParseError);
    CHECK_THROWS_AS(parse_factorization("2\n0 1\n0 2\n"), ParseError);
}

TEST_CASE("negation flips every entry") {
    auto m = random_signing(6, 42);
    auto neg = m.negated();
    for (int i = 0; i < 6; i++)
        for (int j = 0; j < 6; j++) CHECK(neg.at(i, j) == -m.at(i, j));
    CHECK(disc_graph(neg) == disc_graph(m));
}
