#include "core/commands.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>

#include "core/crown.hpp"
#include "core/cyclic.hpp"
#include "core/oracle.hpp"
#include "core/rng.hpp"
#include "core/spectral.hpp"
#include "core/switcher_factorize.hpp"
#include "core/switchers.hpp"

namespace bipdisc {

using nlohmann::json;

std::string content_digest(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::ostringstream out;
    out << f.rdbuf();
    return out.str();
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << bytes;
}

namespace {

json rat_json(const Rat& r) { return to_double(r); }

void put_rat(json& obj, const std::string& key, const Rat& r) {
    obj[key] = rat_json(r);
    obj[key + "_exact"] = to_string(r);
}

Rat require_rational(const json& req, const std::string& key, const Rat& fallback,
                     bool* present = nullptr) {
    if (present) *present = false;
    if (!req.contains(key)) return fallback;
    if (present) *present = true;
    const auto& v = req.at(key);
    std::optional<Rat> r;
    if (v.is_string())
        r = parse_rational(v.get<std::string>());
    else if (v.is_number_integer())
        r = Rat(v.get<long long>(), 1);
    else if (v.is_number_float())
        r = parse_rational(std::to_string(v.get<double>()));
    if (!r) throw std::invalid_argument("cannot parse '" + key + "' as a rational");
    return *r;
}

SignMatrix load_signing(const std::string& path, std::string* digest) {
    std::string bytes = read_file(path);
    if (digest) *digest = content_digest(bytes);
    return parse_signing(bytes);
}

// Commands accept either "input" (a signing file path) or "input_text"
// (inline signing text, used by the library API).
SignMatrix signing_from_request(const json& req, std::string* digest) {
    if (req.contains("input_text")) {
        std::string bytes = req.at("input_text").get<std::string>();
        if (digest) *digest = content_digest(bytes);
        return parse_signing(bytes);
    }
    return load_signing(req.at("input").get<std::string>(), digest);
}

std::string z_string(const std::vector<int>& z) {
    std::string s;
    for (int v : z) s.push_back(v > 0 ? '+' : '-');
    return s;
}

json census_json(const SwitcherCensus& census, int n) {
    json j;
    j["s"] = census.s;
    j["s1"] = census.s1;
    j["s2"] = census.s2;
    j["n"] = n;
    return j;
}

json certificate_json(const CloseCertificate& cert) {
    json j;
    j["orientation"] = cert.orientation;
    j["z"] = z_string(cert.z);
    j["hamming"] = cert.hamming;
    put_rat(j, "normalized", cert.normalized);
    j["bound"] = cert.bound;
    j["satisfied"] = cert.satisfied;
    return j;
}

json cyclic_json(const CyclicFactorizeResult& res) {
    json j;
    put_rat(j, "c", res.c);
    put_rat(j, "bound", res.bound);
    j["tries"] = res.tries;
    j["sampler_ok"] = res.sampler_ok;
    j["negated"] = res.negated;
    json per = json::array();
    for (const auto& e : res.report) {
        json row;
        row["t"] = e.t;
        put_rat(row, "disc", e.disc);
        put_rat(row, "deviation", e.deviation);
        row["within_bound"] = e.within_bound;
        per.push_back(row);
    }
    j["per_matching"] = per;
    return j;
}

json switcher_json(const ManySwitchersResult& res, int n) {
    json j;
    j["route"] = res.parity_route;
    j["hypothesis_ok"] = res.hypothesis_ok;
    j["stages_ok"] = res.stages_ok;
    j["bound_met"] = res.bound_met;
    put_rat(j, "min_disc", res.min_disc);
    j["census"] = census_json(res.census, n);
    j["notes"] = res.stage_notes;
    json per = json::array();
    for (std::size_t t = 0; t < res.per_matching_disc.size(); t++) {
        json row;
        row["t"] = t;
        put_rat(row, "disc", res.per_matching_disc[t]);
        per.push_back(row);
    }
    j["per_matching"] = per;
    return j;
}

// Serializes a full classify run; "details" depends on the branch.
json classify_json(const ClassifyResult& res, int n) {
    json j;
    j["branch"] = res.branch;
    j["attempted"] = res.attempted;
    put_rat(j, "alpha", res.params.alpha);
    put_rat(j, "eta", res.params.eta);
    put_rat(j, "c", res.params.c);
    put_rat(j, "epsilon", res.params.epsilon);
    put_rat(j, "disc_g", res.disc_g);
    j["census"] = census_json(res.census, n);
    j["notes"] = res.notes;
    json details;
    if (res.branch == 1 && res.cyclic) {
        details = cyclic_json(*res.cyclic);
        put_rat(details, "min_disc", res.min_disc);
        details["meets_c"] = res.factorization_meets_c;
    } else if (res.branch == 2 && res.switcher) {
        details = switcher_json(*res.switcher, n);
        put_rat(details, "min_disc", res.min_disc);
        details["meets_c"] = res.factorization_meets_c;
    } else if (res.certificate) {
        details = certificate_json(*res.certificate);
        if (res.spectral) {
            details["sigma1"] = res.spectral->sigma1;
            details["power_iteration_converged"] = res.spectral->converged;
            details["residual"] = res.spectral->residual;
        }
    }
    j["details"] = details;
    return j;
}

struct GenSpec {
    std::string kind;
    int n = 0;
    std::uint64_t seed = 0;
    std::string orientation = "x";
    long long flips = 0;
};

SignMatrix generate_signing(const GenSpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("n must be at least 1");
    int n = spec.n;
    Rng rng(spec.seed);
    if (spec.kind == "all-plus") return SignMatrix(n, +1);
    if (spec.kind == "all-minus") return SignMatrix(n, -1);
    if (spec.kind == "random") {
        SignMatrix m(n);
        for (int i = 0; i < n; i++)
            for (int j = 0; j < n; j++) m.set(i, j, (rng.next() & 1) ? 1 : -1);
        return m;
    }
    if (spec.kind == "one-sided" || spec.kind == "perturbed") {
        std::vector<int> z(n, -1);
        std::vector<int> order(n);
        for (int i = 0; i < n; i++) order[i] = i;
        rng.shuffle(order);
        for (int i = 0; i < (n + 1) / 2; i++) z[order[i]] = 1;
        SignMatrix m(n);
        bool x_side = spec.orientation != "y";
        for (int i = 0; i < n; i++)
            for (int j = 0; j < n; j++) m.set(i, j, x_side ? z[i] : z[j]);
        if (spec.kind == "perturbed") {
            long long cells = static_cast<long long>(n) * n;
            if (spec.flips < 0 || spec.flips > cells)
                throw std::invalid_argument("flip count must be in [0, n^2]");
            std::vector<long long> all(cells);
            for (long long c = 0; c < cells; c++) all[c] = c;
            rng.shuffle(all);
            for (long long k = 0; k < spec.flips; k++) {
                int i = static_cast<int>(all[k] / n), j = static_cast<int>(all[k] % n);
                m.set(i, j, -m.at(i, j));
            }
        }
        return m;
    }
    throw std::invalid_argument("unknown generator kind '" + spec.kind + "'");
}

json verify_results(const SignMatrix& m, const OneFactorization& f, const Rat& bound,
                    int* exit_code) {
    json results;
    if (f.n() != m.n()) {
        results["valid"] = false;
        results["error"] = "factorization size does not match signing";
        *exit_code = kExitInputError;
        return results;
    }
    auto report = validate_factorization(f);
    results["valid"] = report.valid;
    if (!report.valid) {
        results["violation"] = {{"kind", report.kind == ValidationReport::Kind::not_bijection
                                             ? "not_bijection"
                                             : report.kind == ValidationReport::Kind::duplicate_edge
                                                   ? "duplicate_edge"
                                                   : "wrong_count"},
                                {"matching", report.matching_index},
                                {"column", report.column_index},
                                {"message", report.message}};
        *exit_code = kExitInputError;
        return results;
    }
    json per = json::array();
    Rat min_disc(0, 1);
    bool first = true;
    for (int t = 0; t < f.n(); t++) {
        Rat d = disc_matching(m, f.matchings[t]);
        json row;
        row["t"] = t;
        put_rat(row, "disc", d);
        per.push_back(row);
        if (first || d < min_disc) min_disc = d;
        first = false;
    }
    results["per_matching"] = per;
    put_rat(results, "min_disc", min_disc);
    put_rat(results, "bound", bound);
    bool pass = min_disc >= bound;
    results["pass"] = pass;
    *exit_code = pass ? kExitOk : kExitBoundUnmet;
    return results;
}

CommandOutcome dispatch(const json& req) {
    CommandOutcome out;
    std::string command = req.at("command").get<std::string>();
    std::uint64_t seed = req.value("seed", 0ULL);
    out.report["command"] = command;
    out.report["seed"] = seed;

    json params = req;
    params.erase("command");
    params.erase("input_text");  // identity is carried by the digest
    out.report["parameters"] = params;

    json results;

    if (command == "gen") {
        GenSpec spec;
        spec.kind = req.value("kind", "random");
        spec.n = req.value("n", 0);
        spec.seed = seed;
        spec.orientation = req.value("orientation", "x");
        spec.flips = req.value("k", 0LL);
        SignMatrix m = generate_signing(spec);
        std::string text = serialize_signing(m);
        if (req.contains("output")) write_file(req.at("output").get<std::string>(), text);
        results["n"] = m.n();
        results["digest"] = content_digest(text);
        if (!req.contains("output") || req.value("emit_text", false)) results["text"] = text;
        out.report["digest"] = results["digest"];
    } else if (command == "analyze") {
        std::string digest;
        SignMatrix m = signing_from_request(req, &digest);
        out.report["digest"] = digest;
        auto census = count_switchers(m);
        long long s2t = s2_via_trace(m);
        results = census_json(census, m.n());
        put_rat(results, "disc", disc_graph(m));
        results["s2_trace"] = s2t;
        results["s2_trace_consistent"] = (s2t == census.s2);
        double n4 = std::pow(static_cast<double>(m.n()), 4);
        results["switcher_density"] = static_cast<double>(census.s) / n4;
        results["digest"] = digest;
    } else if (command == "factorize") {
        std::string digest;
        SignMatrix m = signing_from_request(req, &digest);
        out.report["digest"] = digest;
        std::string strategy = req.value("strategy", "auto");
        results["strategy"] = strategy;
        OneFactorization emitted;
        bool have_factorization = false;

        if (strategy == "cyclic") {
            int max_tries = req.value("max_tries", 100);
            auto res = factorize_high_disc(m, max_tries, seed);
            results["cyclic"] = cyclic_json(res);
            emitted = res.factorization;
            have_factorization = true;
            // theorem target: |disc(M_t) - c| <= 6 n^{-1/4} for every t
            bool met = res.sampler_ok;
            for (const auto& pm : res.factorization.matchings) {
                Rat gap = disc_matching(m, pm) - res.c;
                if (gap < Rat(0)) gap = -gap;
                if (!fourth_power_leq(gap, 1296, m.n())) met = false;
            }
            results["bound_met"] = met;
            out.exit_code = met ? kExitOk : kExitBoundUnmet;
        } else if (strategy == "switcher") {
            auto census = count_switchers(m);
            long long n4 = static_cast<long long>(m.n()) * m.n() * m.n() * m.n();
            Rat eta_default(census.s == 0 ? 1 : census.s, n4);
            Rat eta = require_rational(req, "eta", eta_default);
            ManySwitchersOptions opts;
            opts.crown.mode = req.value("crown_mode", "exact") == std::string("heuristic")
                                  ? CrownOptions::Mode::heuristic
                                  : CrownOptions::Mode::exact;
            opts.crown.cache_dir = req.value("crown_cache", "");
            opts.crown.seed = seed;
            auto res = factorize_many_switchers(m, eta, seed, opts);
            results["switcher"] = switcher_json(res, m.n());
            put_rat(results, "eta", eta);
            if (res.factorization.n() == m.n()) {
                emitted = res.factorization;
                have_factorization = true;
                results["bound_met"] = res.bound_met;
                out.exit_code = res.bound_met ? kExitOk : kExitBoundUnmet;
            } else {
                out.exit_code = kExitConstructionFailure;
                results["error"] = "pipeline did not produce a complete factorization";
            }
        } else if (strategy == "auto") {
            Rat epsilon = require_rational(req, "epsilon", Rat(1, 2));
            ClassifyOptions copts;
            copts.switcher.crown.cache_dir = req.value("crown_cache", "");
            copts.switcher.crown.mode = req.value("crown_mode", "exact") == std::string("heuristic")
                                            ? CrownOptions::Mode::heuristic
                                            : CrownOptions::Mode::exact;
            auto res = classify(m, epsilon, seed, copts);
            results["classify"] = classify_json(res, m.n());
            if (res.branch == 1 && res.cyclic) {
                emitted = res.cyclic->factorization;
                have_factorization = true;
                results["bound_met"] = res.factorization_meets_c;
                out.exit_code = res.factorization_meets_c ? kExitOk : kExitBoundUnmet;
            } else if (res.branch == 2 && res.switcher) {
                emitted = res.switcher->factorization;
                have_factorization = true;
                results["bound_met"] = res.factorization_meets_c;
                out.exit_code = res.factorization_meets_c ? kExitOk : kExitBoundUnmet;
            } else {
                out.exit_code = kExitConstructionFailure;
                results["error"] =
                    "signing classifies as close to a balanced one-sided pattern; "
                    "no high-discrepancy factorization constructed. Run `certify` for the "
                    "closeness certificate.";
            }
        } else {
            throw std::invalid_argument("unknown strategy '" + strategy + "'");
        }

        if (have_factorization) {
            std::string text = serialize_factorization(emitted);
            results["factorization_digest"] = content_digest(text);
            if (req.contains("output"))
                write_file(req.at("output").get<std::string>(), text);
            else if (req.value("emit_text", false))
                results["factorization_text"] = text;
        }
    } else if (command == "verify") {
        std::string digest;
        SignMatrix m = signing_from_request(req, &digest);
        out.report["digest"] = digest;
        OneFactorization f = parse_factorization(read_file(req.at("factorization").get<std::string>()));
        Rat bound = require_rational(req, "bound", Rat(0, 1));
        int code = kExitOk;
        results = verify_results(m, f, bound, &code);
        out.exit_code = code;
    } else if (command == "certify") {
        std::string digest;
        SignMatrix m = signing_from_request(req, &digest);
        out.report["digest"] = digest;
        Rat epsilon = require_rational(req, "epsilon", Rat(1, 2));
        ClassifyOptions copts;
        copts.switcher.crown.cache_dir = req.value("crown_cache", "");
        auto res = classify(m, epsilon, seed, copts);
        results = classify_json(res, m.n());
        bool ok = res.branch == 3 ? res.certificate->satisfied : res.factorization_meets_c;
        out.exit_code = ok ? kExitOk : kExitBoundUnmet;
    } else if (command == "oracle") {
        std::string kind = req.value("kind", "");
        if (kind == "crown") {
            int n = req.value("n", 0);
            auto outcome = crown_factorization_search(n);
            results["n"] = n;
            results["nodes"] = outcome.nodes;
            if (outcome.status == CrownSearchOutcome::Status::found) {
                results["status"] = "found";
                results["factors"] = serialize_kn_factors(n, outcome.factors);
            } else if (outcome.status == CrownSearchOutcome::Status::proven_absent) {
                results["status"] = "proven_absent";
            } else {
                results["status"] = "budget_exhausted";
            }
        } else {
            std::string digest;
            SignMatrix m = signing_from_request(req, &digest);
            out.report["digest"] = digest;
            if (kind == "switchers") {
                results = census_json(switcher_count_bruteforce(m), m.n());
            } else if (kind == "best-factorization") {
                auto res = best_factorization_bruteforce(m);
                put_rat(results, "min_disc", res.min_disc);
                results["examined"] = res.examined;
                results["factorization_text"] = serialize_factorization(res.factorization);
            } else if (kind == "nearest") {
                auto res = nearest_one_sided_bruteforce(m);
                results["orientation"] = res.orientation;
                results["z"] = z_string(res.z);
                results["hamming"] = res.hamming;
                put_rat(results, "normalized", res.normalized);
            } else {
                throw std::invalid_argument("unknown oracle kind '" + kind + "'");
            }
        }
    } else {
        throw std::invalid_argument("unknown command '" + command + "'");
    }

    out.report["results"] = results;
    return out;
}

}  // namespace

CommandOutcome run_command(const json& req) {
    auto start = std::chrono::steady_clock::now();
    CommandOutcome out;
    try {
        out = dispatch(req);
    } catch (const ParseError& e) {
        out.exit_code = kExitInputError;
        out.report["error"] = {{"message", e.what()}, {"line", e.line}, {"column", e.column}};
    } catch (const std::invalid_argument& e) {
        out.exit_code = kExitInputError;
        out.report["error"] = {{"message", e.what()}};
    } catch (const std::runtime_error& e) {
        out.exit_code = kExitInputError;
        out.report["error"] = {{"message", e.what()}};
    } catch (const std::exception& e) {
        out.exit_code = kExitConstructionFailure;
        out.report["error"] = {{"message", e.what()}};
    }
    auto elapsed = std::chrono::steady_clock::now() - start;
    out.report["wall_time_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    out.report["exit_code"] = out.exit_code;
    return out;
}

CommandOutcome run_command_text(const std::string& request_json) {
    json req = json::parse(request_json, nullptr, false);
    if (req.is_discarded()) {
        CommandOutcome out;
        out.exit_code = kExitInputError;
        out.report["error"] = {{"message", "request is not valid JSON"}};
        return out;
    }
    return run_command(req);
}

}  // namespace bipdisc
