#include "bipdisc/bipdisc.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include <json.hpp>

#include "core/commands.hpp"
#include "core/sign_matrix.hpp"
#include "core/spectral.hpp"
#include "core/switcher_factorize.hpp"
#include "core/switchers.hpp"

using nlohmann::json;

struct bd_signing {
    bipdisc::SignMatrix m;
};

struct bd_factorization {
    bipdisc::OneFactorization f;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

bd_status fail(bd_status code, const std::string& message) {
    g_last_error = message;
    return code;
}

// Runs `fn`, translating exceptions into status codes.
template <typename Fn>
bd_status guarded(Fn&& fn) {
    try {
        g_last_error.clear();
        return fn();
    } catch (const bipdisc::ParseError& e) {
        return fail(BD_ERR_PARSE, std::string(e.what()) + " (line " + std::to_string(e.line) +
                                      ", column " + std::to_string(e.column) + ")");
    } catch (const std::invalid_argument& e) {
        return fail(BD_ERR_ARGUMENT, e.what());
    } catch (const std::runtime_error& e) {
        return fail(BD_ERR_IO, e.what());
    } catch (const std::exception& e) {
        return fail(BD_ERR_INTERNAL, e.what());
    }
}

}  // namespace

extern "C" {

const char* bd_version(void) { return "1.0.0"; }

const char* bd_status_name(bd_status status) {
    switch (status) {
        case BD_OK: return "ok";
        case BD_ERR_ARGUMENT: return "argument";
        case BD_ERR_PARSE: return "parse";
        case BD_ERR_DIMENSION: return "dimension";
        case BD_ERR_BOUND_UNMET: return "bound-unmet";
        case BD_ERR_CONSTRUCTION: return "construction";
        case BD_ERR_IO: return "io";
        case BD_ERR_INTERNAL: return "internal";
    }
    return "unknown";
}

const char* bd_last_error(void) { return g_last_error.c_str(); }

void bd_string_free(char* s) { std::free(s); }

bd_status bd_signing_parse(const char* text, bd_signing** out) {
    if (!text || !out) return fail(BD_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        *out = new bd_signing{bipdisc::parse_signing(text)};
        return BD_OK;
    });
}

bd_status bd_signing_read(const char* path, bd_signing** out) {
    if (!path || !out) return fail(BD_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        *out = new bd_signing{bipdisc::parse_signing(bipdisc::read_file(path))};
        return BD_OK;
    });
}

bd_status bd_signing_generate(const char* options_json, bd_signing** out) {
    if (!options_json || !out) return fail(BD_ERR_ARGUMENT, "null argument");
    return guarded([&]() -> bd_status {
        json req = json::parse(options_json, nullptr, false);
        if (req.is_discarded()) return fail(BD_ERR_ARGUMENT, "options are not valid JSON");
        req["command"] = "gen";
        req["emit_text"] = true;
        auto outcome = bipdisc::run_command(req);
        if (outcome.exit_code != 0)
            return fail(BD_ERR_ARGUMENT, outcome.report.value("error", json{}).dump());
        *out = new bd_signing{
            bipdisc::parse_signing(outcome.report["results"]["text"].get<std::string>())};
        return BD_OK;
    });
}

bd_status bd_signing_serialize(const bd_signing* s, char** text_out) {
    if (!s || !text_out) return fail(BD_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        *text_out = dup_string(bipdisc::serialize_signing(s->m));
        return BD_OK;
    });
}

bd_status bd_signing_write(const bd_signing* s, const char* path) {
    if (!s || !path) return fail(BD_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        bipdisc::write_file(path, bipdisc::serialize_signing(s->m));
        return BD_OK;
    });
}

int bd_signing_size(const bd_signing* s) { return s ? s->m.n() : 0; }

int bd_signing_entry(const bd_signing* s, int row, int col) {
    if (!s || row < 0 || col < 0 || row >= s->m.n() || col >= s->m.n()) return 0;
    return s->m.at(row, col);
}

void bd_signing_free(bd_signing* s) { delete s; }

bd_status bd_factorization_parse(const char* text, bd_factorization** out) {
    if (!text || !out) return fail(BD_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        *out = new bd_factorization{bipdisc::parse_factorization(text)};
        return BD_OK;
    });
}

bd_status bd_factorization_read(const char* path, bd_factorization** out) {
    if (!path || !out) return fail(BD_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        *out = new bd_factorization{bipdisc::parse_factorization(bipdisc::read_file(path))};
        return BD_OK;
    });
}

bd_status bd_factorization_serialize(const bd_factorization* f, char** text_out) {
    if (!f || !text_out) return fail(BD_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        *text_out = dup_string(bipdisc::serialize_factorization(f->f));
        return BD_OK;
    });
}

bd_status bd_factorization_write(const bd_factorization* f, const char* path) {
    if (!f || !path) return fail(BD_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        bipdisc::write_file(path, bipdisc::serialize_factorization(f->f));
        return BD_OK;
    });
}

int bd_factorization_size(const bd_factorization* f) { return f ? f->f.n() : 0; }

int bd_factorization_entry(const bd_factorization* f, int t, int row) {
    if (!f || t < 0 || t >= f->f.n()) return -1;
    if (row < 0 || row >= f->f.matchings[t].n()) return -1;
    return f->f.matchings[t].map[row];
}

void bd_factorization_free(bd_factorization* f) { delete f; }

bd_status bd_analyze(const bd_signing* s, char** report_json) {
    if (!s || !report_json) return fail(BD_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        auto census = bipdisc::count_switchers(s->m);
        long long s2t = bipdisc::s2_via_trace(s->m);
        json j;
        j["n"] = s->m.n();
        j["s"] = census.s;
        j["s1"] = census.s1;
        j["s2"] = census.s2;
        j["s2_trace"] = s2t;
        auto disc = bipdisc::disc_graph(s->m);
        j["disc"] = bipdisc::to_double(disc);
        j["disc_exact"] = bipdisc::to_string(disc);
        double n4 = 1.0;
        for (int i = 0; i < 4; i++) n4 *= s->m.n();
        j["switcher_density"] = static_cast<double>(census.s) / n4;
        *report_json = dup_string(j.dump());
        return BD_OK;
    });
}

bd_status bd_factorize(const bd_signing* s, const char* options_json, bd_factorization** fact_out,
                       char** report_json) {
    if (!s || !options_json || !fact_out) return fail(BD_ERR_ARGUMENT, "null argument");
    return guarded([&]() -> bd_status {
        json req = json::parse(options_json, nullptr, false);
        if (req.is_discarded()) return fail(BD_ERR_ARGUMENT, "options are not valid JSON");
        req["command"] = "factorize";
        req["emit_text"] = true;
        req["input_text"] = bipdisc::serialize_signing(s->m);
        auto outcome = bipdisc::run_command(req);
        if (report_json) *report_json = dup_string(outcome.report.dump());
        *fact_out = nullptr;
        auto& results = outcome.report["results"];
        if (results.is_object() && results.contains("factorization_text")) {
            *fact_out = new bd_factorization{
                bipdisc::parse_factorization(results["factorization_text"].get<std::string>())};
        }
        switch (outcome.exit_code) {
            case bipdisc::kExitOk: return BD_OK;
            case bipdisc::kExitBoundUnmet:
                return fail(BD_ERR_BOUND_UNMET, "factorization produced; bound not met");
            case bipdisc::kExitInputError: return fail(BD_ERR_ARGUMENT, outcome.report.dump());
            default: return fail(BD_ERR_CONSTRUCTION, outcome.report.dump());
        }
    });
}

bd_status bd_verify(const bd_signing* s, const bd_factorization* f, const char* bound,
                    char** report_json) {
    if (!s || !f) return fail(BD_ERR_ARGUMENT, "null argument");
    return guarded([&]() -> bd_status {
        if (f->f.n() != s->m.n()) return fail(BD_ERR_DIMENSION, "sizes differ");
        auto parsed = bipdisc::parse_rational(bound ? bound : "0");
        if (!parsed) return fail(BD_ERR_ARGUMENT, "bound is not a rational");
        auto report = bipdisc::validate_factorization(f->f);
        json j;
        j["valid"] = report.valid;
        bd_status status = BD_OK;
        if (!report.valid) {
            j["violation"] = {{"matching", report.matching_index},
                              {"column", report.column_index},
                              {"message", report.message}};
            status = BD_ERR_ARGUMENT;
            g_last_error = report.message;
        } else {
            bipdisc::Rat min_disc(0, 1);
            bool first = true;
            for (const auto& pm : f->f.matchings) {
                auto d = bipdisc::disc_matching(s->m, pm);
                if (first || d < min_disc) min_disc = d;
                first = false;
            }
            j["min_disc"] = bipdisc::to_double(min_disc);
            j["min_disc_exact"] = bipdisc::to_string(min_disc);
            j["bound"] = bipdisc::to_double(*parsed);
            bool pass = min_disc >= *parsed;
            j["pass"] = pass;
            if (!pass) status = fail(BD_ERR_BOUND_UNMET, "minimum discrepancy below bound");
        }
        if (report_json) *report_json = dup_string(j.dump());
        return status;
    });
}

bd_status bd_certify(const bd_signing* s, const char* options_json, char** report_json) {
    if (!s || !report_json) return fail(BD_ERR_ARGUMENT, "null argument");
    return guarded([&]() -> bd_status {
        json req = options_json ? json::parse(options_json, nullptr, false) : json::object();
        if (req.is_discarded()) return fail(BD_ERR_ARGUMENT, "options are not valid JSON");
        req["command"] = "certify";
        req["input_text"] = bipdisc::serialize_signing(s->m);
        auto outcome = bipdisc::run_command(req);
        *report_json = dup_string(outcome.report.dump());
        if (outcome.exit_code == bipdisc::kExitOk) return BD_OK;
        if (outcome.exit_code == bipdisc::kExitBoundUnmet)
            return fail(BD_ERR_BOUND_UNMET, "certificate bound not satisfied");
        return fail(BD_ERR_ARGUMENT, outcome.report.dump());
    });
}

bd_status bd_run_command(const char* request_json, char** report_json, int* exit_code_out) {
    if (!request_json) return fail(BD_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        auto outcome = bipdisc::run_command_text(request_json);
        if (report_json) *report_json = dup_string(outcome.report.dump());
        if (exit_code_out) *exit_code_out = outcome.exit_code;
        return BD_OK;
    });
}

}  // extern "C"
