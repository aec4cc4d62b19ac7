#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace skein {

enum ExitCode : int {
  kExitOk = 0,
  kExitParseError = 1,
  kExitInternalError = 2,
  kExitVerificationFailed = 3,
};

/// Runs the command line `args` (args[0] is the program name). All output goes
/// to `out`, diagnostics to `err`; returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skein
