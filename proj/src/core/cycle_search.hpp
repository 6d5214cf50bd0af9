#pragma once

#include <cstdint>
#include <vector>

#include "core/rng.hpp"

namespace bipdisc {

// Factor-by-factor backtracking search for edge-decompositions of a graph
// (at most 64 vertices) into spanning 2-factors with a fixed cycle-length
// multiset per factor. Each factor's cycles are built lowest-unplaced-vertex
// first with an orientation dedupe, which keeps the deterministic search
// canonical; randomized mode shuffles extension order and enforces a node
// budget, for heuristic use with restarts.
class CycleTypeSearch {
public:
    struct Result {
        bool found = false;
        bool budget_exhausted = false;
        long long nodes = 0;
        // factor -> cycles -> vertex sequence
        std::vector<std::vector<std::vector<int>>> factors;
    };

    CycleTypeSearch(int num_vertices, std::vector<std::uint64_t> adjacency,
                    std::vector<int> cycle_lengths, int num_factors);

    // Fixes factor 0 to consecutive vertex blocks (all C4 lengths first, then
    // the rest). Sound for existence questions on vertex-transitive hosts.
    void set_canonical_first_factor(bool on) { canonical_first_ = on; }
    void set_node_budget(long long budget) { node_budget_ = budget; }
    void set_randomized(std::uint64_t seed) {
        randomized_ = true;
        rng_seed_ = seed;
    }

    Result run();

    static std::vector<std::uint64_t> complete_graph(int n);
    // X = 0..n-1, Y = n..2n-1, x_i ~ y_j iff i != j. Requires n <= 32.
    static std::vector<std::uint64_t> crown_graph(int n);

private:
    bool solve_factor(int f);
    bool place_next_cycle(int f, std::vector<int>& need, std::uint64_t placed,
                          std::vector<std::vector<int>>& cycles);
    bool extend_cycle(int f, int target_len, std::vector<int>& rest, std::uint64_t placed,
                      std::vector<int>& path, std::vector<std::vector<int>>& cycles);
    bool degree_prune_ok(std::uint64_t placed) const;
    bool budget_hit();

    bool has(int a, int b) const { return (rem_[a] >> b) & 1; }
    void remove_edge(int a, int b);
    void add_edge(int a, int b);

    int nv_;
    std::vector<std::uint64_t> base_adj_;
    std::vector<int> lengths_;
    int num_factors_;
    bool canonical_first_ = false;
    bool randomized_ = false;
    std::uint64_t rng_seed_ = 0;
    long long node_budget_ = -1;

    std::vector<std::uint64_t> rem_;
    std::vector<std::vector<std::vector<int>>> found_;
    long long nodes_ = 0;
    bool exhausted_ = false;
    Rng rng_{0};
};

}  // namespace bipdisc
