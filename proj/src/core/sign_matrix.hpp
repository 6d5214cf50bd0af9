#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "core/rational.hpp"

namespace bipdisc {

// Parse failure with 1-based location inside the offending text.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& what)
        : std::runtime_error(what), line(line), column(column) {}
    int line;
    int column;
};

// The n x n sign matrix of a signing of K_{n,n}: entry (i, j) is the sign of
// the edge x_i y_j. Immutable in practice; construction fills it once.
class SignMatrix {
public:
    explicit SignMatrix(int n, int fill = +1);

    int n() const { return n_; }
    int at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * n_ + j]; }
    void set(int i, int j, int value);

    SignMatrix negated() const;
    SignMatrix transposed() const;

    long long total_sum() const;
    long long plus_count() const;

    bool operator==(const SignMatrix& other) const {
        return n_ == other.n_ && entries_ == other.entries_;
    }

private:
    int n_;
    std::vector<std::int8_t> entries_;
};

// x_i is matched to y_{map[i]}.
struct PerfectMatching {
    std::vector<int> map;

    int n() const { return static_cast<int>(map.size()); }
    bool is_permutation() const;

    static PerfectMatching identity(int n);

    bool operator==(const PerfectMatching& other) const { return map == other.map; }
};

struct OneFactorization {
    std::vector<PerfectMatching> matchings;

    int n() const { return static_cast<int>(matchings.size()); }
};

long long signed_sum(const SignMatrix& m, const PerfectMatching& pm);
Rat disc_matching(const SignMatrix& m, const PerfectMatching& pm);
Rat disc_graph(const SignMatrix& m);

struct ValidationReport {
    enum class Kind { ok, wrong_count, not_bijection, duplicate_edge };
    bool valid = true;
    Kind kind = Kind::ok;
    int matching_index = -1;
    int column_index = -1;
    std::string message;
};

// Checks that every row is a permutation and that no edge repeats across
// matchings (the Latin-square condition); reports the first violation.
ValidationReport validate_factorization(const OneFactorization& f);

// --- file formats -----------------------------------------------------------
//
// Signing: line 1 is n, lines 2..n+1 hold n characters from {+,-}.
// Factorization: line 1 is n, the next n lines hold n space-separated
// 0-based integers (line t = matching t). Both serializers are byte-exact
// inverses of the parsers.

SignMatrix parse_signing(const std::string& text);
std::string serialize_signing(const SignMatrix& m);

OneFactorization parse_factorization(const std::string& text);
std::string serialize_factorization(const OneFactorization& f);

}  // namespace bipdisc
