#include "core/switchers.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>

namespace bipdisc {

namespace {

int thread_count() {
    if (const char* env = std::getenv("BIPDISC_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

SwitcherCensus census_for_row_range(const SignMatrix& m, int i_begin, int i_end) {
    SwitcherCensus out;
    int n = m.n();
    for (int i = i_begin; i < i_end; i++) {
        for (int j = i + 1; j < n; j++) {
            long long a = 0, b = 0, c = 0, d = 0;
            for (int k = 0; k < n; k++) {
                bool pi = m.at(i, k) > 0, pj = m.at(j, k) > 0;
                if (pi && pj)
                    a++;
                else if (pi)
                    b++;
                else if (pj)
                    c++;
                else
                    d++;
            }
            out.s1 += b * c;
            out.s2 += (b + c) * (a + d);
        }
    }
    out.s = out.s1 + out.s2;
    return out;
}

}  // namespace

SwitcherCensus count_switchers(const SignMatrix& m) {
    int n = m.n();
    int threads = std::min(thread_count(), std::max(1, n / 4));
    if (threads <= 1) return census_for_row_range(m, 0, n);

    std::vector<SwitcherCensus> parts(threads);
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; t++) {
        int lo = n * t / threads, hi = n * (t + 1) / threads;
        pool.emplace_back([&, t, lo, hi] { parts[t] = census_for_row_range(m, lo, hi); });
    }
    for (auto& th : pool) th.join();
    SwitcherCensus out;
    for (const auto& p : parts) {
        out.s1 += p.s1;
        out.s2 += p.s2;
    }
    out.s = out.s1 + out.s2;
    return out;
}

long long trace_mmt_squared(const SignMatrix& m) {
    int n = m.n();
    long long trace = 0;
    for (int i = 0; i < n; i++) {
        for (int j = 0; j < n; j++) {
            long long dot = 0;
            for (int k = 0; k < n; k++) dot += m.at(i, k) * m.at(j, k);
            trace += dot * dot;
        }
    }
    return trace;
}

long long s2_via_trace(const SignMatrix& m) {
    long long n = m.n();
    long long n4 = n * n * n * n;
    long long trace = trace_mmt_squared(m);
    long long diff = n4 - trace;
    if (diff < 0 || diff % 8 != 0)
        throw std::logic_error("trace " + std::to_string(trace) +
                               " inconsistent with n^4 - 8*s2; matrix entries corrupted?");
    return diff / 8;
}

std::vector<SwitcherRecord> enumerate_switchers(const SignMatrix& m,
                                                std::optional<long long> limit) {
    std::vector<SwitcherRecord> out;
    int n = m.n();
    for (int i = 0; i < n; i++)
        for (int j = i + 1; j < n; j++)
            for (int k = 0; k < n; k++)
                for (int l = k + 1; l < n; l++) {
                    int s1 = m.at(i, k) + m.at(j, l);
                    int s2 = m.at(i, l) + m.at(j, k);
                    if (s1 == s2) continue;
                    int prod = m.at(i, k) * m.at(i, l) * m.at(j, k) * m.at(j, l);
                    out.push_back({i, j, k, l, prod > 0 ? 1 : 2, s1, s2});
                    if (limit && static_cast<long long>(out.size()) >= *limit) return out;
                }
    return out;
}

std::vector<SwitcherRecord> max_disjoint_switchers(const SignMatrix& m) {
    std::vector<SwitcherRecord> family;
    int n = m.n();
    std::vector<bool> row_used(n, false), col_used(n, false);
    for (int i = 0; i < n; i++) {
        if (row_used[i]) continue;
        bool taken = false;
        for (int j = i + 1; j < n && !taken; j++) {
            if (row_used[j]) continue;
            for (int k = 0; k < n && !taken; k++) {
                if (col_used[k]) continue;
                for (int l = k + 1; l < n && !taken; l++) {
                    if (col_used[l]) continue;
                    int s1 = m.at(i, k) + m.at(j, l);
                    int s2 = m.at(i, l) + m.at(j, k);
                    if (s1 == s2) continue;
                    int prod = m.at(i, k) * m.at(i, l) * m.at(j, k) * m.at(j, l);
                    family.push_back({i, j, k, l, prod > 0 ? 1 : 2, s1, s2});
                    row_used[i] = row_used[j] = true;
                    col_used[k] = col_used[l] = true;
                    taken = true;
                }
            }
        }
    }
    return family;
}

}  // namespace bipdisc
