#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/cyclic.hpp"
#include "core/rational.hpp"
#include "core/sign_matrix.hpp"
#include "core/switcher_factorize.hpp"
#include "core/switchers.hpp"

namespace bipdisc {

struct SpectralSummary {
    double sigma1 = 0.0;
    std::vector<double> u, v;   // left/right unit singular vectors
    std::vector<int> x, y;      // entrywise signs, sign(0) = +1
    double residual = 0.0;      // ||M^T u - sigma1 v||
    bool converged = false;
    int iterations = 0;
    int restarts = 0;
};

// Power iteration on M^T M from a seeded random unit vector; converged when
// successive Rayleigh quotients change by less than tol. Non-convergence
// restarts from a fresh vector (at most 5 times) and is flagged, never hidden.
SpectralSummary top_singular_pair(const SignMatrix& m, double tol, int max_iter,
                                  std::uint64_t seed);
SpectralSummary top_singular_pair(const SignMatrix& m, std::uint64_t seed);

struct FourthMomentReport {
    long long trace = 0;            // tr((M M^T)^2), exact
    long long s2_from_trace = 0;    // (n^4 - trace) / 8
    long long s2_census = 0;
    long long sum_sigma_sq = 0;     // tr(M M^T) = n^2, exact
    double sigma1_lower = 0.0;      // n * sqrt(1 - 8 s2 / n^4)
    double alpha_measured = 0.0;    // 8 sqrt(s / n^4): smallest alpha with s <= alpha^2 n^4 / 64
};

// Exact moment identities; throws std::logic_error when the trace identity
// and the switcher census disagree (that can only mean corrupted entries).
FourthMomentReport fourth_moment_check(const SignMatrix& m);

struct CloseCertificate {
    std::string orientation;    // "x-side": pattern z 1^T (rows constant);
                                // "y-side": pattern 1 z^T (columns constant)
    std::vector<int> z;         // balanced sign vector
    long long hamming = 0;      // exact recount against the pattern
    Rat normalized{0, 1};       // hamming / n^2
    double bound = 0.0;         // 4 sqrt(alpha)
    bool satisfied = false;     // normalized <= 4 sqrt(alpha), decided exactly
};

// Rounds the singular vectors to signs, puts the more lopsided one in the
// all-ones role, balances the other into z (flipping the excess sign at the
// smallest component magnitudes first), and recounts the Hamming distance
// from scratch.
CloseCertificate nearest_one_sided(const SignMatrix& m, const SpectralSummary& summary,
                                   const Rat& alpha);

struct DichotomyParams {
    Rat epsilon{1, 2};
    Rat alpha{0, 1};   // min(eps^2/16, 1/100)
    Rat eta{0, 1};     // alpha^2/64
    Rat c{0, 1};       // eta/16
};

// Requires 0 < epsilon <= 1 with denominator at most 2000 (keeps the derived
// parameters inside 64-bit rationals).
DichotomyParams dichotomy_params(const Rat& epsilon);

struct ClassifyResult {
    DichotomyParams params;
    Rat disc_g{0, 1};
    SwitcherCensus census;
    int branch = 0;                    // the branch that produced the outcome
    std::vector<int> attempted;        // branches tried, in order
    std::vector<std::string> notes;
    bool factorization_meets_c = false;
    Rat min_disc{0, 1};
    std::optional<CyclicFactorizeResult> cyclic;
    std::optional<ManySwitchersResult> switcher;
    std::optional<SpectralSummary> spectral;
    std::optional<CloseCertificate> certificate;
};

struct ClassifyOptions {
    int cyclic_max_tries = 100;
    ManySwitchersOptions switcher;
    double spectral_tol = 1e-10;
};

// Threshold routing with fall-through: disc(G) > alpha/3 tries the cyclic
// construction, s(G) > eta n^4 tries the switcher pipeline; a constructive
// branch counts only if every matching reaches disc >= c, otherwise the next
// branch runs. The certificate branch always produces a distance.
ClassifyResult classify(const SignMatrix& m, const Rat& epsilon, std::uint64_t seed,
                        const ClassifyOptions& opts = {});

}  // namespace bipdisc
