#pragma once

#include <utility>
#include <vector>

#include "core/two_factor.hpp"

namespace bipdisc {

// Canonical double cover of a cycle C_m: each vertex v lifts to (v,0) and
// (v,1), each edge {u,v} to (u,0)(v,1) and (u,1)(v,0). Vertices are
// (source index, layer).
struct LiftedCycles {
    std::vector<std::vector<std::pair<int, int>>> cycles;
};

// For odd m the lift is a single C_{2m}; for even m, two disjoint copies of
// C_m. Vertex sequences follow the explicit alternating walks. Throws on
// m_len < 3.
LiftedCycles double_cover_cycle(int m_len);

// A 2-factor of K_m given as vertex-sequence cycles.
using KnFactor = std::vector<std::vector<int>>;

// Lifts a 2-factorization of K_m through the double cover, giving a
// 2-factorization of K_{m,m} minus the diagonal matching (layer 0 = X,
// layer 1 = Y). Throws std::invalid_argument if the input is not a
// 2-factorization of K_m.
TwoFactorization lift_two_factorization(const std::vector<KnFactor>& kn_factors, int m);

}  // namespace bipdisc
