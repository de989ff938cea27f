#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "geoprove/prover.hpp"

namespace geoprove {

enum class Command { check, autarky, homog, oracle, report };

enum class OutputFormat { text, json };

// One .geo file, one theorem, one run. A fixed seed makes the whole run
// byte-reproducible.
struct RunConfig {
  std::string input_path;
  Command command = Command::check;
  ImplicationMode mode = ImplicationMode::assumed;
  unsigned precision_bits = 128;
  OutputFormat format = OutputFormat::text;
  std::uint64_t seed = 0;
  std::optional<std::string> constraint;  // "b := a^2", homog/report commands
  std::size_t max_vars = 8;               // GEOPROVE_MAX_VARS override
};

// Exit codes: 0 proved, 1 not proved / inconclusive, 2 refuted with witness,
// 3 input error.
struct RunResult {
  int exit_code = 0;
  std::string output;  // report stream
  std::string error;   // diagnostics
};

RunResult run(const RunConfig& config);

Command parse_command(const std::string& name);  // throws MathError

}  // namespace geoprove
