#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hoflab {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  exit_pass = 0,
  exit_failure = 1,  // a check failed; the counterexample is printed
  exit_usage = 2,    // bad flags, unreadable or malformed input
  exit_exhausted = 3,
};

/// Runs the tool on `args` (without the program name), writing results to
/// `out` and diagnostics to `err`. Returns an ExitCode.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hoflab
