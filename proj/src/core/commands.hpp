#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "core/sign_matrix.hpp"

namespace bipdisc {

// Exit codes shared by the command layer and the CLI:
// 0 success and bound met, 2 ran but bound unmet, 3 input error,
// 4 construction failure.
enum ExitCode : int {
    kExitOk = 0,
    kExitBoundUnmet = 2,
    kExitInputError = 3,
    kExitConstructionFailure = 4,
};

struct CommandOutcome {
    int exit_code = kExitOk;
    nlohmann::json report;  // RunReport: command, digest, seed, parameters, results, wall_time_ms
};

// Executes one command described as JSON (see README for the schema:
// gen | analyze | factorize | verify | certify | oracle). Never throws;
// failures are encoded in exit_code and report["error"].
CommandOutcome run_command(const nlohmann::json& request);
CommandOutcome run_command_text(const std::string& request_json);

// FNV-1a 64-bit content digest, as 16 hex characters.
std::string content_digest(const std::string& bytes);

std::string read_file(const std::string& path);        // throws std::runtime_error
void write_file(const std::string& path, const std::string& bytes);

}  // namespace bipdisc
