#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "core/sign_matrix.hpp"

namespace bipdisc {

// A switcher: a 4-cycle on rows {i,j}, columns {k,l} whose two perfect
// matchings psi1 = {(i,k),(j,l)} and psi2 = {(i,l),(j,k)} have different
// signed sums. Type 1 when the 2x2 entry product is +1 (rank one), type 2
// when it is -1.
struct SwitcherRecord {
    int row_lo, row_hi;
    int col_lo, col_hi;
    int type;            // 1 or 2
    int sum_psi1;        // m(i,k) + m(j,l)
    int sum_psi2;        // m(i,l) + m(j,k)

    int delta() const { return sum_psi2 - sum_psi1; }
};

struct SwitcherCensus {
    long long s = 0;
    long long s1 = 0;
    long long s2 = 0;
};

// Per row pair, with column type counts a = #(+,+), b = #(+,-), c = #(-,+),
// d = #(-,-): the pair contributes b*c type-1 and (b+c)(a+d) type-2
// switchers. O(n^3) overall. Honors the BIPDISC_THREADS env var for the
// row-pair loop; integer sums make the result schedule-independent.
SwitcherCensus count_switchers(const SignMatrix& m);

// s2 recovered from the exact integer identity
// tr((M M^T)^2) = n^4 - 8 s2. Throws std::logic_error when the trace is
// inconsistent with that shape (corrupted entries).
long long s2_via_trace(const SignMatrix& m);

long long trace_mmt_squared(const SignMatrix& m);

// All switchers in lexicographic (row_lo,row_hi,col_lo,col_hi) order,
// truncated at limit when given.
std::vector<SwitcherRecord> enumerate_switchers(const SignMatrix& m,
                                                std::optional<long long> limit = std::nullopt);

// Greedy lexicographic first-fit family of pairwise vertex-disjoint
// switchers; maximal by construction.
std::vector<SwitcherRecord> max_disjoint_switchers(const SignMatrix& m);

}  // namespace bipdisc
