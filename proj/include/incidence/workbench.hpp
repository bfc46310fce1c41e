#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace incidence {

/// Exit codes of the workbench CLI.
enum ExitCode : int {
  kExitOk = 0,
  kExitMathFailure = 1,
  kExitInputFailure = 2,
};

/// Runs the workbench command line (`args[0]` is the program name) writing
/// reports to `out` and diagnostics to `err`.
int run_workbench(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace incidence
