// bipdisc command line: thin argument parser over the shared-library C API.
// Every subcommand is converted to one JSON request for bd_run_command and
// the run report is printed to stdout.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bipdisc/bipdisc.h"

using nlohmann::json;

namespace {

int execute(const json& request, bool pretty) {
    char* report = nullptr;
    int exit_code = 0;
    bd_status status = bd_run_command(request.dump().c_str(), &report, &exit_code);
    if (status != BD_OK) {
        std::cerr << "error: " << bd_last_error() << "\n";
        return 3;
    }
    json parsed = json::parse(report);
    bd_string_free(report);
    std::cout << (pretty ? parsed.dump(2) : parsed.dump()) << "\n";
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bipdisc: discrepancy, switcher census, 1-factorizations, and closeness "
                 "certificates for signed complete bipartite graphs"};
    app.require_subcommand(1);
    bool pretty = false;
    app.add_flag("--json-pretty", pretty, "pretty-print the run report");

    // gen
    auto* gen = app.add_subcommand("gen", "generate a signing file");
    std::string gen_kind = "random", gen_out, gen_orientation = "x";
    int gen_n = 8;
    std::uint64_t gen_seed = 0;
    long long gen_k = 0;
    gen->add_option("--kind", gen_kind, "all-plus|all-minus|random|one-sided|perturbed");
    gen->add_option("-n,--size", gen_n, "part size n")->required();
    gen->add_option("--seed", gen_seed, "random seed");
    gen->add_option("--orientation", gen_orientation, "x|y (one-sided / perturbed base)");
    gen->add_option("--k", gen_k, "flip count (perturbed)");
    gen->add_option("-o,--output", gen_out, "output path")->required();

    // analyze
    auto* analyze = app.add_subcommand("analyze", "discrepancy and switcher census");
    std::string an_input;
    analyze->add_option("-i,--input", an_input, "signing file")->required();

    // factorize
    auto* fact = app.add_subcommand("factorize", "construct a 1-factorization");
    std::string f_input, f_output, f_strategy = "auto", f_eta, f_epsilon, f_crown_mode = "exact",
                f_crown_cache;
    std::uint64_t f_seed = 0;
    int f_max_tries = 100;
    fact->add_option("-i,--input", f_input, "signing file")->required();
    fact->add_option("-o,--output", f_output, "factorization output path");
    fact->add_option("--strategy", f_strategy, "auto|cyclic|switcher");
    fact->add_option("--seed", f_seed, "random seed");
    fact->add_option("--max-tries", f_max_tries, "sampler retry budget (cyclic)");
    fact->add_option("--eta", f_eta, "switcher density parameter (rational)");
    fact->add_option("--epsilon", f_epsilon, "closeness target for auto routing (rational)");
    fact->add_option("--crown-mode", f_crown_mode, "exact|heuristic (odd n)");
    fact->add_option("--crown-cache", f_crown_cache, "crown decomposition cache directory");

    // verify
    auto* verify = app.add_subcommand("verify", "validate a factorization and check a bound");
    std::string v_input, v_fact, v_bound = "0";
    verify->add_option("-i,--input", v_input, "signing file")->required();
    verify->add_option("-f,--factorization", v_fact, "factorization file")->required();
    verify->add_option("--bound", v_bound, "minimum matching discrepancy (rational)");

    // certify
    auto* certify = app.add_subcommand("certify", "run the dichotomy classifier");
    std::string c_input, c_epsilon = "1/2", c_crown_cache;
    std::uint64_t c_seed = 0;
    certify->add_option("-i,--input", c_input, "signing file")->required();
    certify->add_option("--epsilon", c_epsilon, "closeness target (rational)");
    certify->add_option("--seed", c_seed, "random seed");
    certify->add_option("--crown-cache", c_crown_cache, "crown decomposition cache directory");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "brute-force reference computations");
    std::string o_kind, o_input;
    int o_n = 0;
    oracle->add_option("kind", o_kind, "best-factorization|switchers|nearest|crown")->required();
    oracle->add_option("-i,--input", o_input, "signing file");
    oracle->add_option("-n,--size", o_n, "n (crown search)");

    CLI11_PARSE(app, argc, argv);

    json req;
    if (gen->parsed()) {
        req = {{"command", "gen"}, {"kind", gen_kind}, {"n", gen_n},
               {"seed", gen_seed}, {"orientation", gen_orientation}, {"k", gen_k},
               {"output", gen_out}};
    } else if (analyze->parsed()) {
        req = {{"command", "analyze"}, {"input", an_input}};
    } else if (fact->parsed()) {
        req = {{"command", "factorize"}, {"input", f_input}, {"strategy", f_strategy},
               {"seed", f_seed}, {"max_tries", f_max_tries}, {"crown_mode", f_crown_mode}};
        if (!f_output.empty()) req["output"] = f_output;
        if (!f_eta.empty()) req["eta"] = f_eta;
        if (!f_epsilon.empty()) req["epsilon"] = f_epsilon;
        if (!f_crown_cache.empty()) req["crown_cache"] = f_crown_cache;
    } else if (verify->parsed()) {
        req = {{"command", "verify"}, {"input", v_input}, {"factorization", v_fact},
               {"bound", v_bound}};
    } else if (certify->parsed()) {
        req = {{"command", "certify"}, {"input", c_input}, {"epsilon", c_epsilon},
               {"seed", c_seed}};
        if (!c_crown_cache.empty()) req["crown_cache"] = c_crown_cache;
    } else if (oracle->parsed()) {
        req = {{"command", "oracle"}, {"kind", o_kind}};
        if (!o_input.empty()) req["input"] = o_input;
        if (o_n > 0) req["n"] = o_n;
    }

    return execute(req, pretty);
}
