#include "core/two_factor.hpp"

#include <algorithm>

namespace bipdisc {

std::vector<std::pair<int, int>> Cycle::edges() const {
    std::vector<std::pair<int, int>> out;
    int k = half_length();
    out.reserve(2 * k);
    for (int t = 0; t < k; t++) {
        out.emplace_back(xs[t], ys[t]);
        out.emplace_back(xs[(t + 1) % k], ys[t]);
    }
    return out;
}

Cycle canonicalize(const Cycle& c) {
    int k = c.half_length();
    int pos = 0;
    for (int t = 1; t < k; t++)
        if (c.xs[t] < c.xs[pos]) pos = t;
    // Forward from pos: x[pos] y[pos] x[pos+1] ...; backward: x[pos] y[pos-1] x[pos-1] ...
    int y_fwd = c.ys[pos];
    int y_bwd = c.ys[(pos - 1 + k) % k];
    Cycle out;
    out.xs.reserve(k);
    out.ys.reserve(k);
    if (y_fwd <= y_bwd) {
        for (int t = 0; t < k; t++) {
            out.xs.push_back(c.xs[(pos + t) % k]);
            out.ys.push_back(c.ys[(pos + t) % k]);
        }
    } else {
        for (int t = 0; t < k; t++) {
            out.xs.push_back(c.xs[(pos - t + k) % k]);
            out.ys.push_back(c.ys[(pos - t - 1 + 2 * k) % k]);
        }
    }
    return out;
}

std::vector<std::pair<int, int>> TwoFactor::edges() const {
    std::vector<std::pair<int, int>> out;
    for (const auto& c : cycles) {
        auto e = c.edges();
        out.insert(out.end(), e.begin(), e.end());
    }
    return out;
}

std::vector<int> TwoFactor::cycle_type() const {
    std::vector<int> lens;
    for (const auto& c : cycles) lens.push_back(2 * c.half_length());
    std::sort(lens.begin(), lens.end());
    return lens;
}

TwoFactor canonicalize(const TwoFactor& f) {
    TwoFactor out;
    for (const auto& c : f.cycles) out.cycles.push_back(canonicalize(c));
    std::sort(out.cycles.begin(), out.cycles.end(),
              [](const Cycle& a, const Cycle& b) { return a.xs[0] < b.xs[0]; });
    return out;
}

bool c4_is_switcher(const SignMatrix& m, const Cycle& c4) {
    int a = c4.xs[0], c = c4.xs[1];
    int b = c4.ys[0], d = c4.ys[1];
    return m.at(a, b) + m.at(c, d) != m.at(a, d) + m.at(c, b);
}

int count_switcher_c4_components(const SignMatrix& m, const TwoFactor& f) {
    int cnt = 0;
    for (const auto& c : f.cycles)
        if (c.is_c4() && c4_is_switcher(m, c)) cnt++;
    return cnt;
}

int count_c4_components(const TwoFactor& f) {
    int cnt = 0;
    for (const auto& c : f.cycles) cnt += c.is_c4();
    return cnt;
}

bool is_spanning_two_factor(const TwoFactor& f, int n) {
    std::vector<bool> xs(n, false), ys(n, false);
    for (const auto& c : f.cycles) {
        int k = c.half_length();
        if (k < 2 || static_cast<int>(c.ys.size()) != k) return false;
        for (int v : c.xs) {
            if (v < 0 || v >= n || xs[v]) return false;
            xs[v] = true;
        }
        for (int v : c.ys) {
            if (v < 0 || v >= n || ys[v]) return false;
            ys[v] = true;
        }
    }
    for (int v = 0; v < n; v++)
        if (!xs[v] || !ys[v]) return false;
    return true;
}

bool is_two_factorization(const TwoFactorization& tf, int n, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    std::vector<int> used(static_cast<std::size_t>(n) * n, 0);
    auto mark = [&](int i, int j) { return ++used[static_cast<std::size_t>(i) * n + j] == 1; };
    for (std::size_t fi = 0; fi < tf.factors.size(); fi++) {
        if (!is_spanning_two_factor(tf.factors[fi], n))
            return fail("factor " + std::to_string(fi) + " is not a spanning 2-factor");
        for (auto [i, j] : tf.factors[fi].edges())
            if (!mark(i, j))
                return fail("edge (" + std::to_string(i) + "," + std::to_string(j) +
                            ") repeated in factor " + std::to_string(fi));
    }
    if (tf.leave.has_value()) {
        if (tf.leave->n() != n || !tf.leave->is_permutation()) return fail("leave is not a matching");
        for (int i = 0; i < n; i++)
            if (!mark(i, tf.leave->map[i])) return fail("leave repeats an edge");
    }
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++)
            if (used[static_cast<std::size_t>(i) * n + j] != 1)
                return fail("edge (" + std::to_string(i) + "," + std::to_string(j) +
                            ") covered " + std::to_string(used[static_cast<std::size_t>(i) * n + j]) +
                            " times");
    int expect = tf.leave.has_value() ? (n - 1) / 2 : n / 2;
    if (static_cast<int>(tf.factors.size()) != expect)
        return fail("expected " + std::to_string(expect) + " factors");
    return true;
}

std::pair<PerfectMatching, PerfectMatching> alternating_matchings(const TwoFactor& f, int n) {
    PerfectMatching m1, m2;
    m1.map.assign(n, -1);
    m2.map.assign(n, -1);
    for (const auto& c : f.cycles) {
        int k = c.half_length();
        // class A: (xs[t], ys[t]); class B: (xs[t+1], ys[t])
        std::pair<int, int> first_a{c.xs[0], c.ys[0]}, first_b{c.xs[1 % k], c.ys[0]};
        for (int t = 0; t < k; t++) {
            first_a = std::min(first_a, {c.xs[t], c.ys[t]});
            first_b = std::min(first_b, {c.xs[(t + 1) % k], c.ys[t]});
        }
        bool a_first = first_a < first_b;
        for (int t = 0; t < k; t++) {
            int xa = c.xs[t], ya = c.ys[t];
            int xb = c.xs[(t + 1) % k], yb = c.ys[t];
            if (a_first) {
                m1.map[xa] = ya;
                m2.map[xb] = yb;
            } else {
                m1.map[xb] = yb;
                m2.map[xa] = ya;
            }
        }
    }
    return {m1, m2};
}

}  // namespace bipdisc
