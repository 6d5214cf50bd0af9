#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/double_cover.hpp"
#include "core/two_factor.hpp"

namespace bipdisc {

// Per-factor source cycle lengths for the K_n route: (n-3)/4 C4 plus a C3
// when n = 3 mod 4, (n-5)/4 C4 plus a C5 when n = 1 mod 4.
std::vector<int> crown_source_cycle_lengths(int n);

struct CrownSearchOutcome {
    enum class Status { found, proven_absent, budget_exhausted };
    Status status = Status::budget_exhausted;
    std::vector<KnFactor> factors;
    long long nodes = 0;
};

// Deterministic exhaustive search for a 2-factorization of K_n into the
// source cycle types above (n odd, 3 <= n <= 15). K_9 has provably no such
// decomposition; the search exhausts and reports proven_absent.
CrownSearchOutcome crown_factorization_search(int n);

// Cache file format: line 1 = n, then one factor per line, cycles separated
// by ';', each cycle a space-separated list of K_n vertex indices.
std::string serialize_kn_factors(int n, const std::vector<KnFactor>& factors);
std::vector<KnFactor> parse_kn_factors(const std::string& text, int* n_out);

struct CrownOptions {
    enum class Mode { exact, heuristic };
    Mode mode = Mode::exact;
    std::string cache_dir;          // empty: in-memory memoization only
    int heuristic_restarts = 64;
    long long heuristic_node_budget = 400000;
    std::uint64_t seed = 1;
};

struct CrownResult {
    bool ok = false;
    std::string route;   // "lifted-exact", "bipartite-direct", "lifted-heuristic"
    std::string detail;  // failure reason when !ok
    TwoFactorization tf; // factors of K_{n,n} minus the leave; leave included
};

// Builds a 2-factorization of K_{n,n} - leave whose factors are
// (n-3)/2 C4 + C6 (n = 3 mod 4) or (n-5)/2 C4 + C10 (n = 1 mod 4).
// Exact mode covers odd n <= 15 (with a direct bipartite search standing in
// at n = 9, where the K_9 route provably does not exist); heuristic mode
// runs the randomized search with restarts and may fail, which is reported,
// never papered over.
CrownResult crown_decompose_odd(int n, const PerfectMatching& leave, const CrownOptions& opts);

// Applies a Y-side relabeling j -> pm.map[j] so the diagonal becomes pm.
void relabel_leave(TwoFactorization& tf, const PerfectMatching& pm);

}  // namespace bipdisc
