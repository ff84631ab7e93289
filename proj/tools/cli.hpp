#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "quasipolar/antichain.hpp"
#include "quasipolar/perm_group.hpp"

namespace quasipolar::cli {

enum class Command { quasipolarities, strong, bounds, verify, export_golden };
enum class Format { text, json, csv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  Command command = Command::quasipolarities;
  int n = 12;
  int n_max = 12;  // verify only
  GroupKind group = GroupKind::affine;
  Format format = Format::text;
  std::optional<bool> check;  // unset: on for n <= 12
  std::optional<Strategy> strategy;
  std::optional<int> budget_max_n;
  unsigned workers = 1;
  std::optional<std::string> output;

  bool check_enabled() const;
};

/// Executes a parsed configuration. Output goes to `out` unless an output
/// path is set; diagnostics go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv-style arguments (without the program name) and runs them.
/// Reads ANTICHAIN_BUDGET from the environment when --budget is absent.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quasipolar::cli
