#include "core/double_cover.hpp"

#include <stdexcept>
#include <string>

namespace bipdisc {

LiftedCycles double_cover_cycle(int m_len) {
    if (m_len < 3) throw std::invalid_argument("cycle length must be at least 3");
    LiftedCycles out;
    if (m_len % 2 == 1) {
        // (v_0,0) (v_1,1) (v_2,0) ... wraps through both layers once.
        std::vector<std::pair<int, int>> cyc;
        cyc.reserve(2 * m_len);
        for (int k = 0; k < 2 * m_len; k++) cyc.emplace_back(k % m_len, k % 2);
        out.cycles.push_back(std::move(cyc));
    } else {
        for (int start_layer = 0; start_layer < 2; start_layer++) {
            std::vector<std::pair<int, int>> cyc;
            cyc.reserve(m_len);
            for (int k = 0; k < m_len; k++) cyc.emplace_back(k, (k + start_layer) % 2);
            out.cycles.push_back(std::move(cyc));
        }
    }
    return out;
}

namespace {

// Converts a lifted cycle (alternating layers) into a bipartite Cycle with
// layer 0 on the X side.
Cycle to_bipartite_cycle(const std::vector<std::pair<int, int>>& lifted) {
    Cycle c;
    std::size_t start = lifted[0].second == 0 ? 0 : 1;
    std::size_t len = lifted.size();
    for (std::size_t t = 0; t < len; t++) {
        auto [v, layer] = lifted[(start + t) % len];
        if (layer == 0)
            c.xs.push_back(v);
        else
            c.ys.push_back(v);
    }
    return c;
}

}  // namespace

TwoFactorization lift_two_factorization(const std::vector<KnFactor>& kn_factors, int m) {
    // Validate: spanning 2-regular factors whose edges partition E(K_m).
    std::vector<std::vector<int>> used(m, std::vector<int>(m, 0));
    for (const auto& factor : kn_factors) {
        std::vector<bool> covered(m, false);
        for (const auto& cyc : factor) {
            if (cyc.size() < 3) throw std::invalid_argument("source cycle shorter than 3");
            for (std::size_t t = 0; t < cyc.size(); t++) {
                int a = cyc[t], b = cyc[(t + 1) % cyc.size()];
                if (a < 0 || a >= m || b < 0 || b >= m || a == b)
                    throw std::invalid_argument("bad vertex in source cycle");
                used[a][b]++;
                used[b][a]++;
            }
            for (int v : cyc) {
                if (covered[v]) throw std::invalid_argument("vertex reused within a factor");
                covered[v] = true;
            }
        }
        for (int v = 0; v < m; v++)
            if (!covered[v]) throw std::invalid_argument("factor does not span all vertices");
    }
    for (int a = 0; a < m; a++)
        for (int b = 0; b < m; b++)
            if (a != b && used[a][b] != 1)
                throw std::invalid_argument("input factors do not partition E(K_" +
                                            std::to_string(m) + ")");

    TwoFactorization out;
    out.leave = PerfectMatching::identity(m);
    for (const auto& factor : kn_factors) {
        TwoFactor lifted;
        for (const auto& cyc : factor) {
            auto lift = double_cover_cycle(static_cast<int>(cyc.size()));
            for (const auto& walk : lift.cycles) {
                std::vector<std::pair<int, int>> relabeled;
                relabeled.reserve(walk.size());
                for (auto [idx, layer] : walk) relabeled.emplace_back(cyc[idx], layer);
                lifted.cycles.push_back(canonicalize(to_bipartite_cycle(relabeled)));
            }
        }
        out.factors.push_back(canonicalize(lifted));
    }
    return out;
}

}  // namespace bipdisc
