#include "core/sign_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace bipdisc {

SignMatrix::SignMatrix(int n, int fill) : n_(n) {
    if (n < 1) throw std::invalid_argument("matrix size must be positive");
    if (fill != 1 && fill != -1) throw std::invalid_argument("entries must be +1 or -1");
    entries_.assign(static_cast<std::size_t>(n) * n, static_cast<std::int8_t>(fill));
}

void SignMatrix::set(int i, int j, int value) {
    if (value != 1 && value != -1) throw std::invalid_argument("entries must be +1 or -1");
    entries_[static_cast<std::size_t>(i) * n_ + j] = static_cast<std::int8_t>(value);
}

SignMatrix SignMatrix::negated() const {
    SignMatrix out(n_);
    for (int i = 0; i < n_; i++)
        for (int j = 0; j < n_; j++) out.set(i, j, -at(i, j));
    return out;
}

SignMatrix SignMatrix::transposed() const {
    SignMatrix out(n_);
    for (int i = 0; i < n_; i++)
        for (int j = 0; j < n_; j++) out.set(j, i, at(i, j));
    return out;
}

long long SignMatrix::total_sum() const {
    long long s = 0;
    for (auto v : entries_) s += v;
    return s;
}

long long SignMatrix::plus_count() const {
    long long c = 0;
    for (auto v : entries_) c += (v > 0);
    return c;
}

bool PerfectMatching::is_permutation() const {
    std::vector<bool> seen(map.size(), false);
    for (int v : map) {
        if (v < 0 || v >= n() || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

PerfectMatching PerfectMatching::identity(int n) {
    PerfectMatching pm;
    pm.map.resize(n);
    std::iota(pm.map.begin(), pm.map.end(), 0);
    return pm;
}

long long signed_sum(const SignMatrix& m, const PerfectMatching& pm) {
    if (pm.n() != m.n()) throw std::invalid_argument("matching size does not match matrix");
    long long s = 0;
    for (int i = 0; i < m.n(); i++) s += m.at(i, pm.map[i]);
    return s;
}

Rat disc_matching(const SignMatrix& m, const PerfectMatching& pm) {
    long long s = signed_sum(m, pm);
    return Rat(s < 0 ? -s : s, m.n());
}

Rat disc_graph(const SignMatrix& m) {
    long long s = m.total_sum();
    return Rat(s < 0 ? -s : s, static_cast<long long>(m.n()) * m.n());
}

ValidationReport validate_factorization(const OneFactorization& f) {
    ValidationReport report;
    int n = f.n();
    if (n == 0) {
        report.valid = false;
        report.kind = ValidationReport::Kind::wrong_count;
        report.message = "factorization is empty";
        return report;
    }
    for (int t = 0; t < n; t++) {
        if (f.matchings[t].n() != n) {
            report.valid = false;
            report.kind = ValidationReport::Kind::wrong_count;
            report.matching_index = t;
            report.message = "matching " + std::to_string(t) + " has wrong size";
            return report;
        }
        std::vector<int> seen(n, -1);
        for (int i = 0; i < n; i++) {
            int v = f.matchings[t].map[i];
            if (v < 0 || v >= n || seen[v] >= 0) {
                report.valid = false;
                report.kind = ValidationReport::Kind::not_bijection;
                report.matching_index = t;
                report.column_index = i;
                report.message = "matching " + std::to_string(t) + " is not a permutation at column " +
                                 std::to_string(i);
                return report;
            }
            seen[v] = i;
        }
    }
    // Latin condition: edge (i, v) may appear in only one matching.
    std::vector<int> used(static_cast<std::size_t>(n) * n, -1);
    for (int t = 0; t < n; t++) {
        for (int i = 0; i < n; i++) {
            int v = f.matchings[t].map[i];
            auto& slot = used[static_cast<std::size_t>(i) * n + v];
            if (slot >= 0) {
                report.valid = false;
                report.kind = ValidationReport::Kind::duplicate_edge;
                report.matching_index = t;
                report.column_index = i;
                report.message = "edge (" + std::to_string(i) + "," + std::to_string(v) +
                                 ") used by matchings " + std::to_string(slot) + " and " +
                                 std::to_string(t);
                return report;
            }
            slot = t;
        }
    }
    return report;
}

namespace {

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

int parse_size_line(const std::vector<std::string>& lines) {
    if (lines.empty()) throw ParseError(1, 1, "empty input");
    const std::string& first = lines[0];
    if (first.empty()) throw ParseError(1, 1, "expected size on line 1");
    int n = 0;
    for (std::size_t k = 0; k < first.size(); k++) {
        char c = first[k];
        if (c < '0' || c > '9')
            throw ParseError(1, static_cast<int>(k + 1), "size line must be a positive integer");
        n = n * 10 + (c - '0');
        if (n > 100000) throw ParseError(1, static_cast<int>(k + 1), "size out of range");
    }
    if (n < 1) throw ParseError(1, 1, "size must be at least 1");
    return n;
}

}  // namespace

SignMatrix parse_signing(const std::string& text) {
    auto lines = split_lines(text);
    int n = parse_size_line(lines);
    if (static_cast<int>(lines.size()) < n + 1)
        throw ParseError(static_cast<int>(lines.size()) + 1, 1,
                         "expected " + std::to_string(n) + " sign rows");
    SignMatrix m(n);
    for (int i = 0; i < n; i++) {
        const std::string& row = lines[i + 1];
        if (static_cast<int>(row.size()) != n)
            throw ParseError(i + 2, static_cast<int>(row.size()) + 1,
                             "row must have exactly " + std::to_string(n) + " characters");
        for (int j = 0; j < n; j++) {
            if (row[j] == '+')
                m.set(i, j, +1);
            else if (row[j] == '-')
                m.set(i, j, -1);
            else
                throw ParseError(i + 2, j + 1, "expected '+' or '-'");
        }
    }
    return m;
}

std::string serialize_signing(const SignMatrix& m) {
    std::string out = std::to_string(m.n());
    out.push_back('\n');
    for (int i = 0; i < m.n(); i++) {
        for (int j = 0; j < m.n(); j++) out.push_back(m.at(i, j) > 0 ? '+' : '-');
        out.push_back('\n');
    }
    return out;
}

OneFactorization parse_factorization(const std::string& text) {
    auto lines = split_lines(text);
    int n = parse_size_line(lines);
    if (static_cast<int>(lines.size()) < n + 1)
        throw ParseError(static_cast<int>(lines.size()) + 1, 1,
                         "expected " + std::to_string(n) + " matching rows");
    OneFactorization f;
    for (int t = 0; t < n; t++) {
        std::istringstream row(lines[t + 1]);
        PerfectMatching pm;
        int v;
        while (row >> v) pm.map.push_back(v);
        if (pm.n() != n)
            throw ParseError(t + 2, 1, "matching row must contain " + std::to_string(n) + " integers");
        for (int i = 0; i < n; i++)
            if (pm.map[i] < 0 || pm.map[i] >= n)
                throw ParseError(t + 2, i + 1, "matching entry out of range");
        f.matchings.push_back(std::move(pm));
    }
    return f;
}

std::string serialize_factorization(const OneFactorization& f) {
    std::string out = std::to_string(f.n());
    out.push_back('\n');
    for (const auto& pm : f.matchings) {
        for (int i = 0; i < pm.n(); i++) {
            if (i) out.push_back(' ');
            out += std::to_string(pm.map[i]);
        }
        out.push_back('\n');
    }
    return out;
}

}  // namespace bipdisc
