#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace logmono::cli {

/// Exit codes of run().
enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 1,  // unreadable or malformed files, invariant violations, degenerate pairings
  kUsage = 2,         // bad flags, over-budget requests
};

/// Runs one subcommand. `args` excludes the program name. Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace logmono::cli
