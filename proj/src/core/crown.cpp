#include "core/crown.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "core/cycle_search.hpp"

namespace bipdisc {

std::vector<int> crown_source_cycle_lengths(int n) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("need odd n >= 3");
    std::vector<int> lengths;
    if (n % 4 == 3) {
        for (int i = 0; i < (n - 3) / 4; i++) lengths.push_back(4);
        lengths.push_back(3);
    } else {
        for (int i = 0; i < (n - 5) / 4; i++) lengths.push_back(4);
        lengths.push_back(5);
    }
    return lengths;
}

CrownSearchOutcome crown_factorization_search(int n) {
    if (n < 3 || n > 15 || n % 2 == 0)
        throw std::invalid_argument("exact search covers odd n in [3, 15]");
    CycleTypeSearch search(n, CycleTypeSearch::complete_graph(n), crown_source_cycle_lengths(n),
                           (n - 1) / 2);
    search.set_canonical_first_factor(n >= 7);
    auto res = search.run();
    CrownSearchOutcome out;
    out.nodes = res.nodes;
    if (res.found) {
        out.status = CrownSearchOutcome::Status::found;
        out.factors = res.factors;
    } else if (!res.budget_exhausted) {
        out.status = CrownSearchOutcome::Status::proven_absent;
    }
    return out;
}

std::string serialize_kn_factors(int n, const std::vector<KnFactor>& factors) {
    std::string out = std::to_string(n) + "\n";
    for (const auto& factor : factors) {
        for (std::size_t c = 0; c < factor.size(); c++) {
            if (c) out.push_back(';');
            for (std::size_t v = 0; v < factor[c].size(); v++) {
                if (v) out.push_back(' ');
                out += std::to_string(factor[c][v]);
            }
        }
        out.push_back('\n');
    }
    return out;
}

std::vector<KnFactor> parse_kn_factors(const std::string& text, int* n_out) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw ParseError(1, 1, "empty cache file");
    int n = std::stoi(line);
    if (n_out) *n_out = n;
    std::vector<KnFactor> factors;
    int line_no = 1;
    while (std::getline(in, line)) {
        line_no++;
        if (line.empty()) continue;
        KnFactor factor;
        std::istringstream fl(line);
        std::string cycle_text;
        while (std::getline(fl, cycle_text, ';')) {
            std::istringstream cl(cycle_text);
            std::vector<int> cyc;
            int v;
            while (cl >> v) {
                if (v < 0 || v >= n) throw ParseError(line_no, 1, "vertex index out of range");
                cyc.push_back(v);
            }
            if (cyc.size() < 3) throw ParseError(line_no, 1, "cycle shorter than 3");
            factor.push_back(std::move(cyc));
        }
        factors.push_back(std::move(factor));
    }
    return factors;
}

namespace {

std::mutex cache_mutex;
std::map<int, std::vector<KnFactor>> memory_cache;

std::string cache_path(const std::string& dir, int n) {
    return dir + "/crown-" + std::to_string(n) + ".txt";
}

bool try_disk_cache(const std::string& dir, int n, std::vector<KnFactor>* out) {
    if (dir.empty()) return false;
    std::ifstream f(cache_path(dir, n));
    if (!f) return false;
    std::stringstream buf;
    buf << f.rdbuf();
    try {
        int file_n = 0;
        auto factors = parse_kn_factors(buf.str(), &file_n);
        if (file_n != n) return false;
        *out = std::move(factors);
        return true;
    } catch (...) {
        return false;
    }
}

void write_disk_cache(const std::string& dir, int n, const std::vector<KnFactor>& factors) {
    if (dir.empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    std::ofstream f(cache_path(dir, n));
    if (f) f << serialize_kn_factors(n, factors);
}

// Direct search on the crown graph itself for the bipartite target types.
// Needed at n = 9, where K_9 admits no C4+C5 2-factorization but
// K_{9,9} - I does decompose into 2 C4 + C10 factors.
bool bipartite_direct_search(int n, TwoFactorization* out) {
    if (n > 32) return false;
    int c4 = (n % 4 == 3) ? (n - 3) / 2 : (n - 5) / 2;
    int long_len = (n % 4 == 3) ? 6 : 10;
    std::vector<int> vertex_lengths(c4, 4);
    vertex_lengths.push_back(long_len);
    int total = 0;
    for (int len : vertex_lengths) total += len;
    if (total != 2 * n) return false;
    CycleTypeSearch search(2 * n, CycleTypeSearch::crown_graph(n), vertex_lengths, (n - 1) / 2);
    auto res = search.run();
    if (!res.found) return false;
    TwoFactorization tf;
    tf.leave = PerfectMatching::identity(n);
    for (const auto& factor : res.factors) {
        TwoFactor f;
        for (const auto& walk : factor) {
            Cycle c;
            std::size_t start = walk[0] < n ? 0 : 1;
            for (std::size_t t = 0; t < walk.size(); t++) {
                int v = walk[(start + t) % walk.size()];
                if (v < n)
                    c.xs.push_back(v);
                else
                    c.ys.push_back(v - n);
            }
            f.cycles.push_back(canonicalize(c));
        }
        tf.factors.push_back(canonicalize(f));
    }
    *out = tf;
    return true;
}

}  // namespace

void relabel_leave(TwoFactorization& tf, const PerfectMatching& pm) {
    for (auto& factor : tf.factors) {
        for (auto& cyc : factor.cycles)
            for (auto& y : cyc.ys) y = pm.map[y];
        factor = canonicalize(factor);
    }
    tf.leave = pm;
}

CrownResult crown_decompose_odd(int n, const PerfectMatching& leave, const CrownOptions& opts) {
    CrownResult result;
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("need odd n >= 3");
    if (leave.n() != n || !leave.is_permutation())
        throw std::invalid_argument("leave must be a perfect matching of size n");

    auto lift_and_finish = [&](const std::vector<KnFactor>& factors, const std::string& route) {
        result.tf = lift_two_factorization(factors, n);
        relabel_leave(result.tf, leave);
        result.ok = true;
        result.route = route;
    };

    if (opts.mode == CrownOptions::Mode::exact) {
        if (n > 15) {
            result.detail = "exact search cutoff is n <= 15; use heuristic mode";
            return result;
        }
        {
            std::lock_guard<std::mutex> lock(cache_mutex);
            auto it = memory_cache.find(n);
            if (it != memory_cache.end()) {
                lift_and_finish(it->second, "lifted-exact");
                return result;
            }
        }
        std::vector<KnFactor> cached;
        if (try_disk_cache(opts.cache_dir, n, &cached)) {
            {
                std::lock_guard<std::mutex> lock(cache_mutex);
                memory_cache[n] = cached;
            }
            lift_and_finish(cached, "lifted-exact");
            return result;
        }
        auto search = crown_factorization_search(n);
        if (search.status == CrownSearchOutcome::Status::found) {
            {
                std::lock_guard<std::mutex> lock(cache_mutex);
                memory_cache[n] = search.factors;
            }
            write_disk_cache(opts.cache_dir, n, search.factors);
            lift_and_finish(search.factors, "lifted-exact");
            return result;
        }
        if (search.status == CrownSearchOutcome::Status::proven_absent) {
            // K_n has no decomposition of the source type (n = 9); decompose
            // the crown directly instead.
            TwoFactorization direct;
            if (bipartite_direct_search(n, &direct)) {
                result.tf = std::move(direct);
                relabel_leave(result.tf, leave);
                result.ok = true;
                result.route = "bipartite-direct";
                result.detail = "K_" + std::to_string(n) +
                                " source decomposition proven absent; used direct crown search";
                return result;
            }
            result.detail = "no source decomposition of K_" + std::to_string(n) +
                            " and direct crown search failed";
            return result;
        }
        result.detail = "exact search exhausted its budget";
        return result;
    }

    // heuristic: randomized search over K_n with restarts, validated by the lift
    for (int r = 0; r < opts.heuristic_restarts; r++) {
        CycleTypeSearch search(n, CycleTypeSearch::complete_graph(n), crown_source_cycle_lengths(n),
                               (n - 1) / 2);
        search.set_canonical_first_factor(true);
        search.set_randomized(Rng::derive(opts.seed, static_cast<std::uint64_t>(r)));
        search.set_node_budget(opts.heuristic_node_budget);
        auto res = search.run();
        if (res.found) {
            lift_and_finish(res.factors, "lifted-heuristic");
            result.detail = "restart " + std::to_string(r + 1);
            return result;
        }
    }
    result.detail = "heuristic failed after " + std::to_string(opts.heuristic_restarts) +
                    " restarts (budget " + std::to_string(opts.heuristic_node_budget) + " nodes each)";
    return result;
}

}  // namespace bipdisc
