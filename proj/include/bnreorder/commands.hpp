#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bnreorder {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitInvalid = 1,   // unreadable file, parse or validation error
  kExitUsage = 2,     // bad arguments
  kExitNegative = 3,  // a decision came out negative (entails false)
};

/// Dispatches one command line. `args` excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bnreorder
