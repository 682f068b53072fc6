#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace ilwhodge::cli {

enum class Format { json, csv, latex, pretty };

struct RunConfig {
  int genus_order = 5;
  int hierarchy_index = 2;
  Format output_format = Format::json;
  unsigned long long seed = 20150101;
  std::optional<std::string> output_path;
  /// Test mode: add `perturb_delta` to C_g for this g.
  std::optional<int> perturb_genus;
  std::string perturb_delta = "1/1000000";
};

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2 };

/// Runs the command line; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ilwhodge::cli
