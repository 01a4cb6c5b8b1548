#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rrge {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitParse = 1,
  kExitBreakdown = 2,
  kExitIterationCap = 3,
  kExitVerifyFailed = 4,
};

/// Runs the tool on `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rrge
