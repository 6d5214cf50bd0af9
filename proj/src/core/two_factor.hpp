#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "core/sign_matrix.hpp"

namespace bipdisc {

// One cycle of a bipartite 2-factor, stored as alternating index sequences:
// x_{xs[0]} y_{ys[0]} x_{xs[1]} y_{ys[1]} ... y_{ys[k-1]} back to x_{xs[0]}.
// Half-length k >= 2, so cycle length 2k >= 4.
struct Cycle {
    std::vector<int> xs;
    std::vector<int> ys;

    int half_length() const { return static_cast<int>(xs.size()); }
    bool is_c4() const { return half_length() == 2; }

    // Edges in traversal order: (xs[t], ys[t]) then (xs[t+1], ys[t]).
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Cycle& other) const { return xs == other.xs && ys == other.ys; }
};

// Canonical form: rotate so the minimal X-index comes first, then traverse
// toward its smaller-indexed Y-neighbor. Makes equality tests meaningful.
Cycle canonicalize(const Cycle& c);

struct TwoFactor {
    std::vector<Cycle> cycles;

    std::vector<std::pair<int, int>> edges() const;
    // Sorted multiset of cycle lengths (2k values).
    std::vector<int> cycle_type() const;
};

TwoFactor canonicalize(const TwoFactor& f);

struct TwoFactorization {
    std::vector<TwoFactor> factors;
    std::optional<PerfectMatching> leave;  // present iff n odd
};

// A C4 component on x-pair {a,c}, y-pair {b,d} is a switcher when its two
// perfect matchings have different signed sums.
bool c4_is_switcher(const SignMatrix& m, const Cycle& c4);
int count_switcher_c4_components(const SignMatrix& m, const TwoFactor& f);
int count_c4_components(const TwoFactor& f);

// True when the factor is a spanning 2-regular subgraph of K_{n,n}:
// vertex-disjoint cycles covering all X- and Y-indices exactly once.
bool is_spanning_two_factor(const TwoFactor& f, int n);

// Checks that the factors (plus the leave, when present) partition E(K_{n,n}).
bool is_two_factorization(const TwoFactorization& tf, int n, std::string* why = nullptr);

// Splits a spanning 2-factor into its two alternating perfect matchings.
// Per cycle, the alternating class containing the cycle's lexicographically
// smallest edge goes to .first.
std::pair<PerfectMatching, PerfectMatching> alternating_matchings(const TwoFactor& f, int n);

}  // namespace bipdisc
