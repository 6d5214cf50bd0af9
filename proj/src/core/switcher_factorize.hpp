#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/crown.hpp"
#include "core/cyclic.hpp"
#include "core/rational.hpp"
#include "core/sign_matrix.hpp"
#include "core/switchers.hpp"
#include "core/two_factor.hpp"

namespace bipdisc {

struct SeedMatchingResult {
    PerfectMatching matching;
    Rat disc{0, 1};
    int family_size = 0;
    long long signed_sum = 0;
};

// High-discrepancy perfect matching from a maximal disjoint switcher family:
// orient each switcher toward its larger matching sum, fill the uncovered
// vertices in ascending order, keep whichever of the two assemblies has the
// larger absolute sum. disc >= family_size / n.
SeedMatchingResult seed_matching(const SignMatrix& m);

struct ContractionScheme {
    std::vector<std::pair<int, int>> x_pairs;
    std::vector<std::pair<int, int>> y_pairs;
    BitMatrix a;                 // a[i][j] = 1 iff the C4 on x-pair i, y-pair j is a switcher
    long long switcher_total = 0;
};

struct C4FactorizationResult {
    bool ok = false;             // every factor reached the switcher target
    TwoFactorization tf;
    ContractionScheme scheme;
    std::vector<int> per_factor_switchers;
    int scheme_samples = 0;
    int pi_attempts = 0;
};

// Even-n C4-factorization by pair contraction: samples `tries` random
// contraction schemes keeping the one with most switcher cells, then retries
// concentrated shift permutations until every factor carries at least eta*n
// switcher C4 components. On exhaustion returns the best attempt with honest
// per-factor counts.
C4FactorizationResult build_c4_factorization_even(const SignMatrix& m, const Rat& eta, int tries,
                                                  std::uint64_t seed);

struct RelabelResult {
    bool ok = false;
    TwoFactorization tf;
    std::vector<int> per_factor_switchers;
    int tries_used = 0;
};

// Applies one index permutation to both sides of every factor (identity
// first, then random draws) until every factor has at least eta*n/2 switcher
// C4 components. Returns the best attempt when the budget runs out.
RelabelResult relabel_switcher_rich(const SignMatrix& m, const TwoFactorization& tf, const Rat& eta,
                                    int tries, std::uint64_t seed);

struct AppliedSwitcher {
    Cycle component;
    int delta;  // change applied to the first matching's signed sum
};

struct SplitResult {
    bool refused = false;            // precondition unmet: too few switcher components
    int switcher_components = 0;
    PerfectMatching m1, m2;
    std::vector<AppliedSwitcher> applied;
    int case_taken = 0;              // 0 = both sides already large, else 1 or 2
    Rat disc1{0, 1}, disc2{0, 1};
};

// Splits a spanning 2-factor into two perfect matchings with
// disc >= alpha/4 - 3/n, applying switcher components from the larger
// same-sign class in ascending component order.
SplitResult split_two_factor(const SignMatrix& m, const TwoFactor& f, const Rat& alpha);

struct ManySwitchersOptions {
    int contraction_tries = 32;
    int relabel_tries = 50;
    CrownOptions crown;
};

struct ManySwitchersResult {
    bool hypothesis_ok = false;      // s(G) >= eta n^4
    bool stages_ok = false;          // every stage met its own target
    bool bound_met = false;          // every matching disc >= eta/8 - 3/n
    OneFactorization factorization;
    std::vector<Rat> per_matching_disc;
    Rat min_disc{0, 1};
    SwitcherCensus census;
    std::vector<std::string> stage_notes;
    std::string parity_route;        // "even-contraction" or "odd-crown"
};

// Full many-switchers pipeline: even n contracts pairs into a C4-rich
// factorization; odd n seeds a matching, decomposes the crown, relabels for
// switcher-rich factors; both split every factor with alpha = eta/2. Runs to
// completion even when stage targets fail, reporting honest discrepancies.
ManySwitchersResult factorize_many_switchers(const SignMatrix& m, const Rat& eta,
                                             std::uint64_t seed,
                                             const ManySwitchersOptions& opts = {});

}  // namespace bipdisc
