#include "core/switcher_factorize.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

#include "core/rng.hpp"

namespace bipdisc {

SeedMatchingResult seed_matching(const SignMatrix& m) {
    int n = m.n();
    auto family = max_disjoint_switchers(m);

    PerfectMatching plus, minus;
    plus.map.assign(n, -1);
    minus.map.assign(n, -1);
    std::vector<bool> row_used(n, false), col_used(n, false);
    for (const auto& q : family) {
        bool psi1_larger = q.sum_psi1 > q.sum_psi2;
        // psi1 = {(row_lo,col_lo),(row_hi,col_hi)}, psi2 = crossed
        if (psi1_larger) {
            plus.map[q.row_lo] = q.col_lo;
            plus.map[q.row_hi] = q.col_hi;
            minus.map[q.row_lo] = q.col_hi;
            minus.map[q.row_hi] = q.col_lo;
        } else {
            plus.map[q.row_lo] = q.col_hi;
            plus.map[q.row_hi] = q.col_lo;
            minus.map[q.row_lo] = q.col_lo;
            minus.map[q.row_hi] = q.col_hi;
        }
        row_used[q.row_lo] = row_used[q.row_hi] = true;
        col_used[q.col_lo] = col_used[q.col_hi] = true;
    }
    std::vector<int> free_rows, free_cols;
    for (int i = 0; i < n; i++) {
        if (!row_used[i]) free_rows.push_back(i);
        if (!col_used[i]) free_cols.push_back(i);
    }
    for (std::size_t k = 0; k < free_rows.size(); k++) {
        plus.map[free_rows[k]] = free_cols[k];
        minus.map[free_rows[k]] = free_cols[k];
    }

    long long sp = signed_sum(m, plus), sm = signed_sum(m, minus);
    SeedMatchingResult out;
    out.family_size = static_cast<int>(family.size());
    if (std::abs(sp) >= std::abs(sm)) {
        out.matching = plus;
        out.signed_sum = sp;
    } else {
        out.matching = minus;
        out.signed_sum = sm;
    }
    out.disc = Rat(std::abs(out.signed_sum), n);
    return out;
}

namespace {

ContractionScheme sample_scheme(const SignMatrix& m, Rng& rng) {
    int n = m.n();
    int half = n / 2;
    ContractionScheme scheme;
    auto px = rng.permutation(n);
    auto py = rng.permutation(n);
    for (int i = 0; i < half; i++) {
        scheme.x_pairs.emplace_back(px[2 * i], px[2 * i + 1]);
        scheme.y_pairs.emplace_back(py[2 * i], py[2 * i + 1]);
    }
    scheme.a.n = half;
    scheme.a.v.assign(static_cast<std::size_t>(half) * half, 0);
    for (int i = 0; i < half; i++) {
        auto [p, q] = scheme.x_pairs[i];
        for (int j = 0; j < half; j++) {
            auto [r, s] = scheme.y_pairs[j];
            bool sw = m.at(p, r) + m.at(q, s) != m.at(p, s) + m.at(q, r);
            scheme.a.v[static_cast<std::size_t>(i) * half + j] = sw;
            scheme.switcher_total += sw;
        }
    }
    return scheme;
}

}  // namespace

C4FactorizationResult build_c4_factorization_even(const SignMatrix& m, const Rat& eta, int tries,
                                                  std::uint64_t seed) {
    int n = m.n();
    if (n % 2 != 0 || n < 2) throw std::invalid_argument("even n required");
    if (tries < 1) throw std::invalid_argument("tries must be at least 1");
    int half = n / 2;

    C4FactorizationResult out;
    Rng scheme_rng(Rng::derive(seed, 0));
    for (int t = 0; t < tries; t++) {
        ContractionScheme cand = sample_scheme(m, scheme_rng);
        if (t == 0 || cand.switcher_total > out.scheme.switcher_total) out.scheme = std::move(cand);
    }
    out.scheme_samples = tries;

    const BitMatrix& a = out.scheme.a;
    Rat pi_bound = default_concentration_bound(half);
    int best_min_h = -1;
    PerfectMatching best_pi;
    std::vector<int> best_h;
    for (int attempt = 0; attempt < tries; attempt++) {
        out.pi_attempts = attempt + 1;
        auto sample = sample_concentrated_permutation(a, pi_bound, 8,
                                                      Rng::derive(seed, 100 + attempt));
        const CyclicCandidate& cand = sample.best;
        int min_h = *std::min_element(cand.h.begin(), cand.h.end());
        if (min_h > best_min_h) {
            best_min_h = min_h;
            best_pi = cand.pi;
            best_h = cand.h;
        }
        if (value_geq_scaled(min_h, eta, n)) {  // min_t h_t >= eta * n
            best_pi = cand.pi;
            best_h = cand.h;
            out.ok = true;
            break;
        }
    }

    for (int k = 0; k < half; k++) {
        TwoFactor factor;
        for (int i = 0; i < half; i++) {
            int j = best_pi.map[(i + k) % half];
            Cycle c4;
            c4.xs = {out.scheme.x_pairs[i].first, out.scheme.x_pairs[i].second};
            c4.ys = {out.scheme.y_pairs[j].first, out.scheme.y_pairs[j].second};
            factor.cycles.push_back(canonicalize(c4));
        }
        out.tf.factors.push_back(canonicalize(factor));
        out.per_factor_switchers.push_back(best_h[k]);
    }
    return out;
}

RelabelResult relabel_switcher_rich(const SignMatrix& m, const TwoFactorization& tf, const Rat& eta,
                                    int tries, std::uint64_t seed) {
    int n = m.n();
    if (tries < 1) throw std::invalid_argument("tries must be at least 1");
    Rng rng(Rng::derive(seed, 7));

    auto apply_perm = [&](const std::vector<int>& pi) {
        TwoFactorization relabeled;
        for (const auto& factor : tf.factors) {
            TwoFactor rf;
            for (const auto& c : factor.cycles) {
                Cycle rc;
                for (int x : c.xs) rc.xs.push_back(pi[x]);
                for (int y : c.ys) rc.ys.push_back(pi[y]);
                rf.cycles.push_back(canonicalize(rc));
            }
            relabeled.factors.push_back(canonicalize(rf));
        }
        if (tf.leave.has_value()) {
            PerfectMatching leave;
            leave.map.assign(n, -1);
            for (int i = 0; i < n; i++) leave.map[pi[i]] = pi[tf.leave->map[i]];
            relabeled.leave = leave;
        }
        return relabeled;
    };

    RelabelResult out;
    int best_min = -1;
    for (int t = 0; t < tries; t++) {
        std::vector<int> pi;
        if (t == 0) {
            pi.resize(n);
            for (int i = 0; i < n; i++) pi[i] = i;
        } else {
            pi = rng.permutation(n);
        }
        TwoFactorization cand = apply_perm(pi);
        std::vector<int> counts;
        int min_count = INT_MAX;
        for (const auto& factor : cand.factors) {
            int c = count_switcher_c4_components(m, factor);
            counts.push_back(c);
            min_count = std::min(min_count, c);
        }
        if (min_count > best_min) {
            best_min = min_count;
            out.tf = cand;
            out.per_factor_switchers = counts;
        }
        out.tries_used = t + 1;
        // every factor needs >= eta*n/2 switcher components
        if (value_geq_scaled(2 * min_count, eta, n)) {
            out.ok = true;
            out.tf = std::move(cand);
            out.per_factor_switchers = std::move(counts);
            return out;
        }
    }
    return out;
}

SplitResult split_two_factor(const SignMatrix& m, const TwoFactor& f, const Rat& alpha) {
    int n = m.n();
    if (alpha <= Rat(0)) throw std::invalid_argument("alpha must be positive");
    if (!is_spanning_two_factor(f, n)) throw std::invalid_argument("not a spanning 2-factor");

    TwoFactor cf = canonicalize(f);
    std::vector<Cycle> switcher_comps;
    for (const auto& c : cf.cycles)
        if (c.is_c4() && c4_is_switcher(m, c)) switcher_comps.push_back(c);

    SplitResult out;
    out.switcher_components = static_cast<int>(switcher_comps.size());
    if (!value_geq_scaled(out.switcher_components, alpha, n)) {
        out.refused = true;
        return out;
    }

    auto [m1, m2] = alternating_matchings(cf, n);
    long long s1 = signed_sum(m, m1), s2 = signed_sum(m, m2);
    Rat d1(std::llabs(s1), n), d2(std::llabs(s2), n);
    Rat quarter = alpha / Rat(4);

    if (std::min(d1, d2) >= quarter) {
        out.m1 = std::move(m1);
        out.m2 = std::move(m2);
        out.case_taken = 0;
        out.disc1 = d1;
        out.disc2 = d2;
        return out;
    }

    if (d1 > d2) {
        std::swap(m1, m2);
        std::swap(s1, s2);
        std::swap(d1, d2);
    }

    // Delta for a component: the change in s1 if its two edges swap sides.
    auto delta_of = [&](const Cycle& c) {
        int a = c.xs[0], ccol = c.xs[1];
        int b = c.ys[0], d = c.ys[1];
        int in_sum, other_sum;
        if (m1.map[a] == b) {
            in_sum = m.at(a, b) + m.at(ccol, d);
            other_sum = m.at(a, d) + m.at(ccol, b);
        } else {
            in_sum = m.at(a, d) + m.at(ccol, b);
            other_sum = m.at(a, b) + m.at(ccol, d);
        }
        return other_sum - in_sum;
    };

    std::vector<std::pair<Cycle, int>> pos, neg;
    for (const auto& c : switcher_comps) {
        int d = delta_of(c);
        (d > 0 ? pos : neg).emplace_back(c, d);
    }
    // larger class, ties to the one that raises s1
    auto& chosen = pos.size() >= neg.size() ? pos : neg;

    auto apply = [&](const Cycle& c, int delta) {
        int a = c.xs[0], ccol = c.xs[1];
        std::swap(m1.map[a], m2.map[a]);
        std::swap(m1.map[ccol], m2.map[ccol]);
        s1 += delta;
        s2 -= delta;
        out.applied.push_back({c, delta});
    };

    // want = ceil(alpha * n / 2)
    __int128 target = static_cast<__int128>(alpha.numerator()) * n;
    __int128 den2 = static_cast<__int128>(2) * alpha.denominator();
    long long want = static_cast<long long>((target + den2 - 1) / den2);

    if (d2 < Rat(3) * quarter) {
        out.case_taken = 1;
        for (long long k = 0; k < want && k < static_cast<long long>(chosen.size()); k++)
            apply(chosen[k].first, chosen[k].second);
    } else {
        out.case_taken = 2;
        long long h = 0;
        long long lower = want - 2;
        for (std::size_t k = 0; h < lower && k < chosen.size(); k++) {
            apply(chosen[k].first, chosen[k].second);
            h += std::abs(chosen[k].second);
        }
    }

    out.m1 = std::move(m1);
    out.m2 = std::move(m2);
    out.disc1 = Rat(std::llabs(s1), n);
    out.disc2 = Rat(std::llabs(s2), n);
    return out;
}

ManySwitchersResult factorize_many_switchers(const SignMatrix& m, const Rat& eta,
                                             std::uint64_t seed, const ManySwitchersOptions& opts) {
    int n = m.n();
    if (eta <= Rat(0)) throw std::invalid_argument("eta must be positive");
    ManySwitchersResult out;
    out.census = count_switchers(m);
    long long n4 = static_cast<long long>(n) * n * n * n;
    out.hypothesis_ok = value_geq_scaled(out.census.s, eta, n4);
    if (!out.hypothesis_ok)
        out.stage_notes.push_back("hypothesis s >= eta*n^4 fails (s=" + std::to_string(out.census.s) +
                                  "); construction attempted anyway");

    Rat half_eta = eta / Rat(2);
    out.stages_ok = true;

    TwoFactorization tf;
    std::vector<PerfectMatching> matchings;

    if (n % 2 == 0) {
        out.parity_route = "even-contraction";
        auto c4 = build_c4_factorization_even(m, eta, opts.contraction_tries, seed);
        if (!c4.ok) {
            out.stages_ok = false;
            out.stage_notes.push_back("contraction stage below target: min per-factor switchers = " +
                                      std::to_string(*std::min_element(c4.per_factor_switchers.begin(),
                                                                       c4.per_factor_switchers.end())));
        }
        tf = std::move(c4.tf);
    } else {
        out.parity_route = "odd-crown";
        auto seeded = seed_matching(m);
        out.stage_notes.push_back("seed matching |sum|=" + std::to_string(std::llabs(seeded.signed_sum)) +
                                  " from " + std::to_string(seeded.family_size) + " disjoint switchers");
        if (!value_geq_scaled(2 * seeded.family_size, eta, n)) {
            out.stages_ok = false;
            out.stage_notes.push_back("seed family smaller than eta*n/2");
        }
        auto crown = crown_decompose_odd(n, seeded.matching, opts.crown);
        if (!crown.ok) {
            out.stages_ok = false;
            out.stage_notes.push_back("crown decomposition failed: " + crown.detail);
            return out;
        }
        out.stage_notes.push_back("crown route: " + crown.route);

        // Relabeling must keep the leave fixed, so run it in coordinates where
        // the leave is the diagonal: y' = leave^{-1}(y).
        std::vector<int> inv(n);
        for (int i = 0; i < n; i++) inv[seeded.matching.map[i]] = i;
        TwoFactorization diag_tf = crown.tf;
        for (auto& factor : diag_tf.factors) {
            for (auto& c : factor.cycles)
                for (auto& y : c.ys) y = inv[y];
            factor = canonicalize(factor);
        }
        diag_tf.leave = PerfectMatching::identity(n);
        SignMatrix diag_m(n);
        for (int i = 0; i < n; i++)
            for (int j = 0; j < n; j++) diag_m.set(i, j, m.at(i, seeded.matching.map[j]));

        auto relabeled = relabel_switcher_rich(diag_m, diag_tf, eta, opts.relabel_tries, seed);
        if (!relabeled.ok) {
            out.stages_ok = false;
            int worst = relabeled.per_factor_switchers.empty()
                            ? 0
                            : *std::min_element(relabeled.per_factor_switchers.begin(),
                                                relabeled.per_factor_switchers.end());
            out.stage_notes.push_back("relabeling below target after " +
                                      std::to_string(relabeled.tries_used) +
                                      " tries (min per-factor switchers = " + std::to_string(worst) + ")");
        }
        // back to original coordinates
        tf = relabeled.tf;
        for (auto& factor : tf.factors) {
            for (auto& c : factor.cycles)
                for (auto& y : c.ys) y = seeded.matching.map[y];
            factor = canonicalize(factor);
        }
        tf.leave = seeded.matching;
        matchings.push_back(seeded.matching);
    }

    for (std::size_t fi = 0; fi < tf.factors.size(); fi++) {
        auto split = split_two_factor(m, tf.factors[fi], half_eta);
        if (split.refused) {
            out.stages_ok = false;
            out.stage_notes.push_back("factor " + std::to_string(fi) + " split refused (" +
                                      std::to_string(split.switcher_components) +
                                      " switcher components); plain alternating split used");
            auto [m1, m2] = alternating_matchings(tf.factors[fi], n);
            matchings.push_back(std::move(m1));
            matchings.push_back(std::move(m2));
        } else {
            matchings.push_back(std::move(split.m1));
            matchings.push_back(std::move(split.m2));
        }
    }

    out.factorization.matchings = std::move(matchings);
    out.bound_met = true;
    bool first = true;
    for (const auto& pm : out.factorization.matchings) {
        Rat d = disc_matching(m, pm);
        out.per_matching_disc.push_back(d);
        if (first || d < out.min_disc) out.min_disc = d;
        first = false;
        // disc >= eta/8 - 3/n  <=>  disc + 3/n >= eta/8
        if (!meets_bound_with_slack(d, 3, n, eta / Rat(8))) out.bound_met = false;
    }
    return out;
}

}  // namespace bipdisc
