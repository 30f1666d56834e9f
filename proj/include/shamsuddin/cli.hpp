#pragma once

// Command-line front end. Every subcommand prints a verdict as text or JSON;
// the exit status depends only on the outcome class:
//   0  a verdict was produced (whatever it says)
//   1  well-formed input, but the operation failed (e.g. a precondition)
//   2  parse or usage error

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace shamsuddin {

enum class ExitStatus : int { Verdict = 0, OperationFailed = 1, UsageError = 2 };

struct CliConfig {
  std::string subcommand;
  std::optional<std::string> a;
  std::optional<std::string> b;
  std::optional<std::string> derivation;
  std::optional<std::string> map;
  std::optional<std::string> poly;
  int deg_bound = 2;
  int n_max = 10;
  std::string grid = "-1,0,1";
  std::uint64_t pair_budget = 100'000'000;
  std::string format = "text";  // "text" or "json"
  bool verify = false;
};

/// Dispatches an already-parsed configuration.
ExitStatus run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// Parses command-line arguments (without the program name) and runs them.
ExitStatus run_command_line(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shamsuddin
