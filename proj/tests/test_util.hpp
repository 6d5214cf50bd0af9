#pragma once

#include <string>
#include <vector>

#include "core/rng.hpp"
#include "core/sign_matrix.hpp"

namespace testutil {

// Rows as strings of '+'/'-'.
inline bipdisc::SignMatrix make_signing(const std::vector<std::string>& rows) {
    bipdisc::SignMatrix m(static_cast<int>(rows.size()));
    for (int i = 0; i < m.n(); i++)
        for (int j = 0; j < m.n(); j++) m.set(i, j, rows[i][j] == '+' ? 1 : -1);
    return m;
}

inline bipdisc::SignMatrix random_signing(int n, std::uint64_t seed) {
    bipdisc::Rng rng(seed);
    bipdisc::SignMatrix m(n);
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) m.set(i, j, (rng.next() & 1) ? 1 : -1);
    return m;
}

// +1 with probability p (deterministic given seed).
inline bipdisc::SignMatrix random_signing_density(int n, double p, std::uint64_t seed) {
    bipdisc::Rng rng(seed);
    bipdisc::SignMatrix m(n);
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) m.set(i, j, rng.uniform01() < p ? 1 : -1);
    return m;
}

// Enumerates all 2^(n*n) signings via a counter; bit (i*n+j) set => +1.
inline bipdisc::SignMatrix signing_from_bits(int n, unsigned bits) {
    bipdisc::SignMatrix m(n);
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) m.set(i, j, (bits >> (i * n + j)) & 1 ? 1 : -1);
    return m;
}

inline bipdisc::SignMatrix balanced_one_sided(int n, bool x_side) {
    bipdisc::SignMatrix m(n);
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) {
            int z = (x_side ? i : j) < (n + 1) / 2 ? 1 : -1;
            m.set(i, j, z);
        }
    return m;
}

inline bipdisc::PerfectMatching shift_matching(int n, int t) {
    bipdisc::PerfectMatching pm;
    pm.map.resize(n);
    for (int i = 0; i < n; i++) pm.map[i] = (i + t) % n;
    return pm;
}

}  // namespace testutil
