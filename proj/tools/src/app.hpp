#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace freeclt::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,
  kSchema = 3,
  kCapExceeded = 4,
};

/// Runs the command line `args` (args[0] is the program name). Results go to
/// `out`; diagnostics and, unless --manifest is given, the run manifest go
/// to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace freeclt::cli
