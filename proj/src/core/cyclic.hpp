#pragma once

#include <cstdint>
#include <vector>

#include "core/rational.hpp"
#include "core/sign_matrix.hpp"

namespace bipdisc {

// Diagnostics for one base permutation pi of a cyclic factorization:
// h[t] counts the 1-entries of `a` hit by the shift-t matching.
struct CyclicCandidate {
    PerfectMatching pi;
    std::vector<int> h;
    long long ones = 0;        // total 1-entries of a
    Rat expectation{0, 1};     // ones / n
    Rat max_dev{0, 1};         // max_t |h_t - ones/n|
};

// 0/1 matrix, row-major.
struct BitMatrix {
    int n = 0;
    std::vector<std::uint8_t> v;

    static BitMatrix from_plus_entries(const SignMatrix& m);
    std::uint8_t at(int i, int j) const { return v[static_cast<std::size_t>(i) * n + j]; }
};

// Computes h_t for all shifts in O(n^2) plus the deviation summary.
CyclicCandidate evaluate_candidate(const BitMatrix& a, const PerfectMatching& pi);

struct SampleResult {
    bool ok = false;
    int tries = 0;
    CyclicCandidate best;  // the accepted candidate, or the best seen on failure
};

// Draws uniform permutations from the seeded generator until
// max_dev <= bound, up to max_tries. On failure carries the best candidate.
SampleResult sample_concentrated_permutation(const BitMatrix& a, const Rat& bound,
                                             int max_tries, std::uint64_t seed);

// Exact rationalization of the default deviation bound 3*n^{3/4}: the largest
// multiple of 1/1 => floor(3 n^{3/4} * n)/n, so comparisons against the
// integer deviations |h_t*n - ones| stay exact.
Rat default_concentration_bound(int n);

struct CyclicReportEntry {
    int t;
    Rat disc{0, 1};
    Rat deviation{0, 1};  // 2|h_t - p n| / n, an upper bound for |disc - c|
    bool within_bound = false;
};

struct CyclicFactorizeResult {
    bool sampler_ok = false;
    bool all_within_bound = false;
    bool negated = false;  // construction ran on -M because p < 1/2
    int tries = 0;
    Rat c{0, 1};           // disc(G)
    Rat bound{0, 1};
    OneFactorization factorization;
    std::vector<CyclicReportEntry> report;
};

// Shifts of a single concentrated permutation: matching t maps i to
// pi((i+t) mod n). Works on -M when the +1 density is below 1/2 (ties keep
// the original); all reported discrepancies refer to the original signing.
CyclicFactorizeResult factorize_high_disc(const SignMatrix& m, int max_tries, std::uint64_t seed);
CyclicFactorizeResult factorize_high_disc(const SignMatrix& m, int max_tries, std::uint64_t seed,
                                          const Rat& bound);

}  // namespace bipdisc
