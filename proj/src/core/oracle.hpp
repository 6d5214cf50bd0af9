#pragma once

#include <cstdint>

#include "core/rational.hpp"
#include "core/sign_matrix.hpp"
#include "core/spectral.hpp"
#include "core/switchers.hpp"

namespace bipdisc {

// Brute-force references, deliberately dumb. Budgets guard runtimes:
// 1-factorization enumeration counts 576 squares at n=4 and 161280 at n=5.
struct OracleBudget {
    int max_n_factorizations = 5;
    int max_n_enumeration = 10;
    int max_n_nearest = 14;
};

struct BruteForceFactorization {
    OneFactorization factorization;  // a maximizer of min-matching discrepancy
    Rat min_disc{0, 1};
    long long examined = 0;          // number of 1-factorizations enumerated
};

// Exhausts every 1-factorization of K_{n,n} (Latin squares, rows as
// matchings) and returns one maximizing the minimum matching discrepancy.
BruteForceFactorization best_factorization_bruteforce(const SignMatrix& m,
                                                      const OracleBudget& budget = {});

// Direct scan over all (row pair, column pair) 4-cycles.
SwitcherCensus switcher_count_bruteforce(const SignMatrix& m, const OracleBudget& budget = {});

// Exhausts every balanced z and both orientations; minimal Hamming distance,
// first minimizer in scan order (x-side patterns before y-side, z by
// ascending bit pattern). bound/satisfied fields are not filled.
CloseCertificate nearest_one_sided_bruteforce(const SignMatrix& m, const OracleBudget& budget = {});

// Seeded random Latin square via row-by-row backtracking with shuffled
// candidate order. Not uniform over all Latin squares, but deterministic
// per seed and cheap.
OneFactorization random_latin_square(int n, std::uint64_t seed);

}  // namespace bipdisc
