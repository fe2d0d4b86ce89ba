#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace omc {

/// Exit statuses of the command-line tool.
enum ExitStatus : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitInvariant = 2,
  kExitHypothesis = 3,
  kExitResourceGuard = 4,
  kExitCheckFailed = 5,
};

/// Runs the tool on `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace omc
