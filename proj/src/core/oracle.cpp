#include "core/oracle.hpp"

#include <bit>
#include <functional>
#include <stdexcept>

#include "core/rng.hpp"

namespace bipdisc {

namespace {

struct LatinEnumerator {
    const SignMatrix& m;
    int n;
    std::vector<std::vector<int>> rows;   // chosen matchings
    std::vector<std::uint32_t> col_used;  // col_used[i]: values already used at position i
    BruteForceFactorization best;
    bool have_best = false;

    explicit LatinEnumerator(const SignMatrix& mat) : m(mat), n(mat.n()), col_used(mat.n(), 0) {}

    void consider() {
        best.examined++;
        Rat worst(0, 1);
        bool first = true;
        for (const auto& row : rows) {
            long long s = 0;
            for (int i = 0; i < n; i++) s += m.at(i, row[i]);
            Rat d(s < 0 ? -s : s, n);
            if (first || d < worst) worst = d;
            first = false;
        }
        if (!have_best || worst > best.min_disc) {
            best.min_disc = worst;
            best.factorization.matchings.clear();
            for (const auto& row : rows) {
                PerfectMatching pm;
                pm.map = row;
                best.factorization.matchings.push_back(pm);
            }
            have_best = true;
        }
    }

    void fill_row(std::vector<int>& row, std::uint32_t row_used, int pos) {
        if (pos == n) {
            rows.push_back(row);
            for (int i = 0; i < n; i++) col_used[i] |= 1u << row[i];
            if (static_cast<int>(rows.size()) == n)
                consider();
            else
                next_row();
            for (int i = 0; i < n; i++) col_used[i] &= ~(1u << row[i]);
            rows.pop_back();
            return;
        }
        std::uint32_t avail = ~(row_used | col_used[pos]) & ((1u << n) - 1);
        while (avail) {
            int v = std::countr_zero(avail);
            avail &= avail - 1;
            row[pos] = v;
            fill_row(row, row_used | (1u << v), pos + 1);
        }
    }

    void next_row() {
        std::vector<int> row(n);
        fill_row(row, 0, 0);
    }
};

}  // namespace

BruteForceFactorization best_factorization_bruteforce(const SignMatrix& m,
                                                      const OracleBudget& budget) {
    if (m.n() > budget.max_n_factorizations)
        throw std::invalid_argument("n exceeds the factorization enumeration budget (" +
                                    std::to_string(budget.max_n_factorizations) + ")");
    LatinEnumerator enumerator(m);
    enumerator.next_row();
    return enumerator.best;
}

SwitcherCensus switcher_count_bruteforce(const SignMatrix& m, const OracleBudget& budget) {
    int n = m.n();
    if (n > budget.max_n_enumeration)
        throw std::invalid_argument("n exceeds the enumeration budget (" +
                                    std::to_string(budget.max_n_enumeration) + ")");
    SwitcherCensus census;
    for (int i = 0; i < n; i++)
        for (int j = i + 1; j < n; j++)
            for (int k = 0; k < n; k++)
                for (int l = k + 1; l < n; l++) {
                    int sum1 = m.at(i, k) + m.at(j, l);
                    int sum2 = m.at(i, l) + m.at(j, k);
                    if (sum1 == sum2) continue;
                    int prod = m.at(i, k) * m.at(i, l) * m.at(j, k) * m.at(j, l);
                    if (prod > 0)
                        census.s1++;
                    else
                        census.s2++;
                }
    census.s = census.s1 + census.s2;
    return census;
}

CloseCertificate nearest_one_sided_bruteforce(const SignMatrix& m, const OracleBudget& budget) {
    int n = m.n();
    if (n > budget.max_n_nearest)
        throw std::invalid_argument("n exceeds the nearest-pattern budget (" +
                                    std::to_string(budget.max_n_nearest) + ")");

    // row_plus[i] = #(+1) in row i; col_plus[j] likewise.
    std::vector<int> row_plus(n, 0), col_plus(n, 0);
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++)
            if (m.at(i, j) > 0) {
                row_plus[i]++;
                col_plus[j]++;
            }

    CloseCertificate best;
    best.hamming = static_cast<long long>(n) * n + 1;
    int lo = (n - 1) / 2, hi = (n + 2) / 2;  // balanced: plus count in {lo..hi}
    for (std::uint32_t mask = 0; mask < (1u << n); mask++) {
        int plus = std::popcount(mask);
        if (plus < lo || plus > hi) continue;
        // x-side: pattern z 1^T, rows constant z_i
        long long ham_x = 0, ham_y = 0;
        for (int i = 0; i < n; i++) {
            bool zp = (mask >> i) & 1;
            ham_x += zp ? (n - row_plus[i]) : row_plus[i];
            ham_y += zp ? (n - col_plus[i]) : col_plus[i];
        }
        for (int side = 0; side < 2; side++) {
            long long ham = side == 0 ? ham_x : ham_y;
            if (ham < best.hamming) {
                best.hamming = ham;
                best.orientation = side == 0 ? "x-side" : "y-side";
                best.z.assign(n, -1);
                for (int i = 0; i < n; i++)
                    if ((mask >> i) & 1) best.z[i] = 1;
            }
        }
    }
    best.normalized = Rat(best.hamming, static_cast<long long>(n) * n);
    return best;
}

OneFactorization random_latin_square(int n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::uint32_t> col_used(n, 0);
    OneFactorization f;

    // Row-by-row: place a random permutation compatible with the columns so
    // far; backtrack within the row, restart the row order if a row wedges.
    std::function<bool(std::vector<int>&, std::uint32_t, int, const std::vector<std::vector<int>>&)>
        place = [&](std::vector<int>& row, std::uint32_t used, int pos,
                    const std::vector<std::vector<int>>& prefs) -> bool {
        if (pos == n) return true;
        for (int v : prefs[pos]) {
            if ((used >> v) & 1) continue;
            if ((col_used[pos] >> v) & 1) continue;
            row[pos] = v;
            if (place(row, used | (1u << v), pos + 1, prefs)) return true;
        }
        return false;
    };

    for (int t = 0; t < n; t++) {
        std::vector<std::vector<int>> prefs(n);
        for (int i = 0; i < n; i++) {
            prefs[i] = rng.permutation(n);
        }
        std::vector<int> row(n);
        if (!place(row, 0, 0, prefs))
            throw std::logic_error("a Latin rectangle always extends; row search cannot fail");
        PerfectMatching pm;
        pm.map = row;
        f.matchings.push_back(pm);
        for (int i = 0; i < n; i++) col_used[i] |= 1u << row[i];
    }
    return f;
}

}  // namespace bipdisc
