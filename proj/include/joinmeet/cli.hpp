#pragma once

// Batch front end: one subcommand per invocation, canonical JSON out.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace joinmeet::cli {

enum ExitCode : int { kOk = 0, kInvariant = 1, kInput = 2, kBudget = 3 };

struct RunConfig {
  std::string subcommand;
  /// File path, builtin fixture name, or "-" / empty for stdin.
  std::string input;
  std::uint32_t max_degree = 4;
  std::string field = "q";
  std::size_t budget_cells = 60'000'000;
  std::size_t budget_pairs = 2'000'000;
  /// Empty: write to the output stream.
  std::string out;

  // Subcommand arguments.
  std::uint64_t number = 0;  // divisor N, boolean K
  std::uint32_t d = 2, n = 4;
  std::size_t rank = 6;
  std::size_t size = 5;
  std::string poset;  // asl on a non-thin lattice
  bool gb = false;    // thin-survey: also run elimination
};

/// Parses argv-style arguments (without the program name) and runs. The
/// report goes to `out` (or --out); diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// Runs an already parsed configuration and returns the report text; throws
/// the library's errors.
std::string execute(const RunConfig& config, std::istream& in);

}  // namespace joinmeet::cli
