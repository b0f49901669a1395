#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace spinhecke {

// Exit codes shared by the CLI and the Python binding.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitVerification = 3;
inline constexpr int kExitInternal = 4;

struct CommandResult {
  nlohmann::ordered_json body;
  int exit_code = kExitOk;
};

// nf, mul, map, verify, dims, jm, cyclotomic, rep, intertwine
std::vector<std::string> command_names();
std::vector<std::string> map_names();

// Runs one command; errors are reported in the body as {"error": {code, message[, offset]}}.
CommandResult run_command(const std::string& command, const nlohmann::json& args);

}  // namespace spinhecke
