#include "core/cyclic.hpp"

#include <stdexcept>

#include "core/rng.hpp"

namespace bipdisc {

BitMatrix BitMatrix::from_plus_entries(const SignMatrix& m) {
    BitMatrix a;
    a.n = m.n();
    a.v.resize(static_cast<std::size_t>(a.n) * a.n);
    for (int i = 0; i < a.n; i++)
        for (int j = 0; j < a.n; j++) a.v[static_cast<std::size_t>(i) * a.n + j] = m.at(i, j) > 0;
    return a;
}

CyclicCandidate evaluate_candidate(const BitMatrix& a, const PerfectMatching& pi) {
    int n = a.n;
    if (pi.n() != n) throw std::invalid_argument("permutation size does not match matrix");
    CyclicCandidate cand;
    cand.pi = pi;
    cand.h.assign(n, 0);
    for (int t = 0; t < n; t++) {
        int ht = 0;
        for (int i = 0; i < n; i++) ht += a.at(i, pi.map[(i + t) % n]);
        cand.h[t] = ht;
    }
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) cand.ones += a.at(i, j);
    cand.expectation = Rat(cand.ones, n);
    long long worst = 0;
    for (int t = 0; t < n; t++) {
        long long dev = std::abs(static_cast<long long>(cand.h[t]) * n - cand.ones);
        if (dev > worst) worst = dev;
    }
    cand.max_dev = Rat(worst, n);
    return cand;
}

SampleResult sample_concentrated_permutation(const BitMatrix& a, const Rat& bound,
                                             int max_tries, std::uint64_t seed) {
    if (max_tries < 1) throw std::invalid_argument("max_tries must be at least 1");
    if (bound <= Rat(0)) throw std::invalid_argument("bound must be positive");
    Rng rng(seed);
    SampleResult result;
    bool have_best = false;
    for (int t = 1; t <= max_tries; t++) {
        PerfectMatching pi;
        pi.map = rng.permutation(a.n);
        CyclicCandidate cand = evaluate_candidate(a, pi);
        if (!have_best || cand.max_dev < result.best.max_dev) {
            result.best = cand;
            have_best = true;
        }
        if (cand.max_dev <= bound) {
            result.ok = true;
            result.tries = t;
            result.best = cand;
            return result;
        }
    }
    result.tries = max_tries;
    return result;
}

Rat default_concentration_bound(int n) {
    // floor(3 n^{3/4} n) / n = floor((81 n^7)^{1/4}) / n
    unsigned __int128 x = 81;
    for (int i = 0; i < 7; i++) x *= static_cast<unsigned>(n);
    return Rat(floor_fourth_root(x), n);
}

CyclicFactorizeResult factorize_high_disc(const SignMatrix& m, int max_tries, std::uint64_t seed) {
    return factorize_high_disc(m, max_tries, seed, default_concentration_bound(m.n()));
}

CyclicFactorizeResult factorize_high_disc(const SignMatrix& m, int max_tries, std::uint64_t seed,
                                          const Rat& bound) {
    int n = m.n();
    if (n < 2) throw std::invalid_argument("need n >= 2");
    CyclicFactorizeResult out;
    out.bound = bound;
    out.c = disc_graph(m);

    long long plus = m.plus_count();
    out.negated = 2 * plus < static_cast<long long>(n) * n;  // p < 1/2; ties keep the original
    BitMatrix a = out.negated ? BitMatrix::from_plus_entries(m.negated())
                              : BitMatrix::from_plus_entries(m);

    SampleResult sample = sample_concentrated_permutation(a, bound, max_tries, seed);
    out.sampler_ok = sample.ok;
    out.tries = sample.tries;

    const PerfectMatching& pi = sample.best.pi;
    out.factorization.matchings.reserve(n);
    for (int t = 0; t < n; t++) {
        PerfectMatching mt;
        mt.map.resize(n);
        for (int i = 0; i < n; i++) mt.map[i] = pi.map[(i + t) % n];
        out.factorization.matchings.push_back(std::move(mt));
    }

    out.all_within_bound = true;
    for (int t = 0; t < n; t++) {
        CyclicReportEntry e;
        e.t = t;
        e.disc = disc_matching(m, out.factorization.matchings[t]);
        // 2|h_t - ones/n| / n, computed on the sampled side; negation leaves
        // the value unchanged because h flips to n - h and ones to n^2 - ones.
        long long dev_num = std::abs(2 * (static_cast<long long>(sample.best.h[t]) * n - sample.best.ones));
        e.deviation = Rat(dev_num, static_cast<long long>(n) * n);
        e.within_bound = e.deviation <= Rat(2) * bound / Rat(n);
        if (!e.within_bound) out.all_within_bound = false;
        out.report.push_back(e);
    }
    return out;
}

}  // namespace bipdisc
