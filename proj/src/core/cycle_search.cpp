#include "core/cycle_search.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace bipdisc {

CycleTypeSearch::CycleTypeSearch(int num_vertices, std::vector<std::uint64_t> adjacency,
                                 std::vector<int> cycle_lengths, int num_factors)
    : nv_(num_vertices),
      base_adj_(std::move(adjacency)),
      lengths_(std::move(cycle_lengths)),
      num_factors_(num_factors) {
    if (nv_ > 64) throw std::invalid_argument("search supports at most 64 vertices");
    int total = 0;
    for (int len : lengths_) total += len;
    if (total != nv_) throw std::invalid_argument("cycle lengths must cover every vertex");
    std::sort(lengths_.begin(), lengths_.end(), std::greater<int>());
}

void CycleTypeSearch::remove_edge(int a, int b) {
    rem_[a] &= ~(1ull << b);
    rem_[b] &= ~(1ull << a);
}

void CycleTypeSearch::add_edge(int a, int b) {
    rem_[a] |= 1ull << b;
    rem_[b] |= 1ull << a;
}

bool CycleTypeSearch::budget_hit() {
    if (++nodes_; node_budget_ >= 0 && nodes_ > node_budget_) {
        exhausted_ = true;
        return true;
    }
    return false;
}

CycleTypeSearch::Result CycleTypeSearch::run() {
    rem_ = base_adj_;
    found_.clear();
    nodes_ = 0;
    exhausted_ = false;
    if (randomized_) rng_ = Rng(rng_seed_);

    bool ok;
    if (canonical_first_) {
        std::vector<std::vector<int>> cycles;
        std::vector<int> order;
        for (int len : lengths_)
            if (len == 4) order.push_back(len);
        for (int len : lengths_)
            if (len != 4) order.push_back(len);
        int v = 0;
        bool valid = true;
        for (int len : order) {
            std::vector<int> cyc;
            for (int i = 0; i < len; i++) cyc.push_back(v++);
            for (int i = 0; i < len && valid; i++)
                if (!has(cyc[i], cyc[(i + 1) % len])) valid = false;
            if (!valid) break;
            for (int i = 0; i < len; i++) remove_edge(cyc[i], cyc[(i + 1) % len]);
            cycles.push_back(std::move(cyc));
        }
        if (!valid) throw std::logic_error("canonical first factor not present in host graph");
        found_.push_back(cycles);
        ok = solve_factor(1);
        if (!ok) found_.pop_back();
    } else {
        ok = solve_factor(0);
    }

    Result res;
    res.found = ok;
    res.budget_exhausted = exhausted_;
    res.nodes = nodes_;
    if (ok) res.factors = found_;
    return res;
}

bool CycleTypeSearch::solve_factor(int f) {
    if (f == num_factors_) {
        for (int v = 0; v < nv_; v++)
            if (rem_[v]) return false;
        return true;
    }
    std::vector<std::vector<int>> cycles;
    std::vector<int> need(lengths_);
    return place_next_cycle(f, need, 0, cycles);
}

bool CycleTypeSearch::place_next_cycle(int f, std::vector<int>& need, std::uint64_t placed,
                                       std::vector<std::vector<int>>& cycles) {
    if (budget_hit()) return false;
    if (need.empty()) {
        found_.push_back(cycles);
        if (solve_factor(f + 1)) return true;
        found_.pop_back();
        return false;
    }
    int start = std::countr_one(placed);  // lowest unplaced vertex
    int prev_len = 0;
    for (std::size_t li = 0; li < need.size(); li++) {
        int len = need[li];
        if (len == prev_len) continue;
        prev_len = len;
        std::vector<int> rest;
        rest.reserve(need.size() - 1);
        for (std::size_t lj = 0; lj < need.size(); lj++)
            if (lj != li) rest.push_back(need[lj]);
        std::vector<int> path{start};
        if (extend_cycle(f, len, rest, placed | (1ull << start), path, cycles)) return true;
        if (exhausted_) return false;
    }
    return false;
}

bool CycleTypeSearch::extend_cycle(int f, int target_len, std::vector<int>& rest,
                                   std::uint64_t placed, std::vector<int>& path,
                                   std::vector<std::vector<int>>& cycles) {
    if (budget_hit()) return false;
    int k = static_cast<int>(path.size());
    int w = path.back();
    int s = path[0];
    if (k == target_len) {
        if (!has(w, s)) return false;
        if (path[1] > path.back()) return false;  // one orientation per cycle
        for (int i = 0; i < target_len; i++) remove_edge(path[i], path[(i + 1) % target_len]);
        cycles.push_back(path);
        bool ok = degree_prune_ok(placed) && place_next_cycle(f, rest, placed, cycles);
        if (!ok) {
            cycles.pop_back();
            for (int i = 0; i < target_len; i++) add_edge(path[i], path[(i + 1) % target_len]);
        }
        return ok;
    }
    std::uint64_t cand = rem_[w] & ~placed;
    if (randomized_) {
        std::vector<int> order;
        while (cand) {
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            order.push_back(v);
        }
        rng_.shuffle(order);
        for (int v : order) {
            path.push_back(v);
            if (extend_cycle(f, target_len, rest, placed | (1ull << v), path, cycles)) return true;
            path.pop_back();
            if (exhausted_) return false;
        }
        return false;
    }
    while (cand) {
        int v = std::countr_zero(cand);
        cand &= cand - 1;
        path.push_back(v);
        if (extend_cycle(f, target_len, rest, placed | (1ull << v), path, cycles)) return true;
        path.pop_back();
        if (exhausted_) return false;
    }
    return false;
}

bool CycleTypeSearch::degree_prune_ok(std::uint64_t placed) const {
    std::uint64_t open = ~placed & ((nv_ == 64) ? ~0ull : ((1ull << nv_) - 1));
    std::uint64_t rest = open;
    while (rest) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        if (std::popcount(rem_[v] & open) < 2) return false;
    }
    return true;
}

std::vector<std::uint64_t> CycleTypeSearch::complete_graph(int n) {
    std::vector<std::uint64_t> adj(n, 0);
    for (int a = 0; a < n; a++)
        for (int b = 0; b < n; b++)
            if (a != b) adj[a] |= 1ull << b;
    return adj;
}

std::vector<std::uint64_t> CycleTypeSearch::crown_graph(int n) {
    if (n > 32) throw std::invalid_argument("crown graph search limited to n <= 32");
    std::vector<std::uint64_t> adj(2 * n, 0);
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++)
            if (i != j) {
                adj[i] |= 1ull << (n + j);
                adj[n + j] |= 1ull << i;
            }
    return adj;
}

}  // namespace bipdisc
