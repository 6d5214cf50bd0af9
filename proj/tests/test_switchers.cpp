#include <doctest.h>

#include <set>

#include "core/oracle.hpp"
#include "core/switchers.hpp"
#include "test_util.hpp"

using namespace bipdisc;
using testutil::make_signing;
using testutil::random_signing;
using testutil::signing_from_bits;

TEST_CASE("census of the two canonical 2x2 patterns") {
    auto type1 = make_signing({"+-", "-+"});
    auto census = count_switchers(type1);
    CHECK(census.s == 1);
    CHECK(census.s1 == 1);
    CHECK(census.s2 == 0);

    auto type2 = make_signing({"++", "+-"});
    census = count_switchers(type2);
    CHECK(census.s == 1);
    CHECK(census.s1 == 0);
    CHECK(census.s2 == 1);

    CHECK(count_switchers(SignMatrix(5, +1)).s == 0);
}

TEST_CASE("a hand-counted row pair") {
    // rows (+,+,-,-) and (+,-,+,-) give column types a=b=c=d=1:
    // 1 type-1 pair plus 2*2 type-2 pairs = 5 switchers on that row pair.
    auto m = make_signing({"++--", "+-+-", "++++", "++++"});
    auto records = enumerate_switchers(m);
    int on_first_pair = 0;
    for (const auto& r : records)
        if (r.row_lo == 0 && r.row_hi == 1) on_first_pair++;
    CHECK(on_first_pair == 5);
    auto census = count_switchers(m);
    CHECK(census.s1 == 1);
    CHECK(census.s2 == 20);
    auto brute = switcher_count_bruteforce(m);
    CHECK(census.s == brute.s);
    CHECK(census.s1 == brute.s1);
    CHECK(census.s2 == brute.s2);
}

TEST_CASE("census equals brute force exhaustively at n = 2 and 3") {
    for (int n = 2; n <= 3; n++) {
        unsigned total = 1u << (n * n);
        for (unsigned bits = 0; bits < total; bits++) {
            auto m = signing_from_bits(n, bits);
            auto fast = count_switchers(m);
            auto brute = switcher_count_bruteforce(m);
            REQUIRE(fast.s == brute.s);
            REQUIRE(fast.s1 == brute.s1);
            REQUIRE(fast.s2 == brute.s2);
        }
    }
}

TEST_CASE("census equals brute force on random instances") {
    for (std::uint64_t seed = 0; seed < 60; seed++) {
        int n = 4 + static_cast<int>(seed % 7);
        auto m = random_signing(n, seed * 31 + 2);
        auto fast = count_switchers(m);
        auto brute = switcher_count_bruteforce(m);
        REQUIRE(fast.s == brute.s);
        REQUIRE(fast.s1 == brute.s1);
        REQUIRE(fast.s2 == brute.s2);
    }
}

TEST_CASE("trace identity") {
    CHECK(trace_mmt_squared(SignMatrix(4, +1)) == 256);
    CHECK(s2_via_trace(SignMatrix(4, +1)) == 0);

    auto m = make_signing({"++", "+-"});
    CHECK(trace_mmt_squared(m) == 8);
    CHECK(s2_via_trace(m) == 1);

    auto d = make_signing({"+-", "-+"});
    CHECK(trace_mmt_squared(d) == 16);
    CHECK(s2_via_trace(d) == 0);

    for (int n = 2; n <= 3; n++) {
        unsigned total = 1u << (n * n);
        for (unsigned bits = 0; bits < total; bits++) {
            auto mm = signing_from_bits(n, bits);
            REQUIRE(s2_via_trace(mm) == count_switchers(mm).s2);
        }
    }
    for (std::uint64_t seed = 0; seed < 40; seed++) {
        auto mm = random_signing(10, seed + 77);
        REQUIRE(s2_via_trace(mm) == count_switchers(mm).s2);
    }
}

TEST_CASE("enumeration matches the census and stays ordered") {
    CHECK(enumerate_switchers(SignMatrix(3, +1)).empty());

    auto single = make_signing({"+-", "-+"});
    auto recs = enumerate_switchers(single);
    REQUIRE(recs.size() == 1);
    CHECK(recs[0].row_lo == 0);
    CHECK(recs[0].row_hi == 1);
    CHECK(recs[0].col_lo == 0);
    CHECK(recs[0].col_hi == 1);
    CHECK(recs[0].type == 1);

    for (std::uint64_t seed = 0; seed < 25; seed++) {
        auto m = random_signing(6, seed * 5 + 3);
        auto census = count_switchers(m);
        auto list = enumerate_switchers(m);
        CHECK(static_cast<long long>(list.size()) == census.s);
        long long t1 = 0, t2 = 0;
        for (std::size_t k = 0; k < list.size(); k++) {
            (list[k].type == 1 ? t1 : t2)++;
            CHECK((std::abs(list[k].delta()) == 2 || std::abs(list[k].delta()) == 4));
            if (k) {
                auto key = [](const SwitcherRecord& r) {
                    return std::tuple(r.row_lo, r.row_hi, r.col_lo, r.col_hi);
                };
                CHECK(key(list[k - 1]) < key(list[k]));
            }
        }
        CHECK(t1 == census.s1);
        CHECK(t2 == census.s2);

        auto limited = enumerate_switchers(m, 3);
        CHECK(static_cast<long long>(limited.size()) == std::min<long long>(3, census.s));
    }
}

TEST_CASE("maximal disjoint families") {
    CHECK(max_disjoint_switchers(SignMatrix(4, +1)).empty());
    CHECK(max_disjoint_switchers(make_signing({"+-", "-+"})).size() == 1);

    for (std::uint64_t seed = 0; seed < 25; seed++) {
        int n = 5 + static_cast<int>(seed % 6);
        auto m = random_signing(n, seed * 11 + 4);
        auto family = max_disjoint_switchers(m);
        std::set<int> rows, cols;
        for (const auto& q : family) {
            CHECK(rows.insert(q.row_lo).second);
            CHECK(rows.insert(q.row_hi).second);
            CHECK(cols.insert(q.col_lo).second);
            CHECK(cols.insert(q.col_hi).second);
        }
        // maximality: every switcher shares a row or column with the family
        for (const auto& q : enumerate_switchers(m)) {
            bool hits = rows.count(q.row_lo) || rows.count(q.row_hi) || cols.count(q.col_lo) ||
                        cols.count(q.col_hi);
            CHECK(hits);
        }
        // the counting bound: any maximal family has at least s / (2 n^3) members
        long long s = count_switchers(m).s;
        long long n3 = static_cast<long long>(n) * n * n;
        CHECK(2 * n3 * static_cast<long long>(family.size()) >= s);
    }
}

TEST_CASE("census is invariant under relabeling and negation") {
    for (std::uint64_t seed = 0; seed < 15; seed++) {
        int n = 6;
        auto m = random_signing(n, seed * 17 + 9);
        auto base = count_switchers(m);

        Rng rng(seed);
        auto rp = rng.permutation(n);
        auto cp = rng.permutation(n);
        SignMatrix permuted(n);
        for (int i = 0; i < n; i++)
            for (int j = 0; j < n; j++) permuted.set(i, j, m.at(rp[i], cp[j]));
        auto after = count_switchers(permuted);
        CHECK(after.s == base.s);
        CHECK(after.s1 == base.s1);
        CHECK(after.s2 == base.s2);

        auto neg = count_switchers(m.negated());
        CHECK(neg.s == base.s);
        CHECK(neg.s1 == base.s1);
        CHECK(neg.s2 == base.s2);
    }
}

TEST_CASE("rank-one signings have s1 = x+ x- y+ y- and no type-2") {
    for (std::uint64_t seed = 0; seed < 20; seed++) {
        int n = 7;
        Rng rng(seed + 1);
        std::vector<int> x(n), y(n);
        long long xp = 0, yp = 0;
        for (int i = 0; i < n; i++) {
            x[i] = (rng.next() & 1) ? 1 : -1;
            y[i] = (rng.next() & 1) ? 1 : -1;
            xp += x[i] > 0;
            yp += y[i] > 0;
        }
        SignMatrix m(n);
        for (int i = 0; i < n; i++)
            for (int j = 0; j < n; j++) m.set(i, j, x[i] * y[j]);
        auto census = count_switchers(m);
        CHECK(census.s2 == 0);
        CHECK(census.s1 == xp * (n - xp) * yp * (n - yp));
    }
}

TEST_CASE("census honors the thread override") {
    auto m = random_signing(24, 123);
    auto base = count_switchers(m);
    setenv("BIPDISC_THREADS", "4", 1);
    auto threaded = count_switchers(m);
    unsetenv("BIPDISC_THREADS");
    CHECK(threaded.s == base.s);
    CHECK(threaded.s1 == base.s1);
    CHECK(threaded.s2 == base.s2);
}
