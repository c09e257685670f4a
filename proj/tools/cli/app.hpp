#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pcov::cli {

enum ExitCode : int {
  kOk = 0,
  kParseFailure = 2,
  kUsageFailure = 3,
  kRefused = 4,
  kIntegrityFailure = 5,
};

/// Runs one command line (args[0] is the program name) and returns the exit
/// code. Results go to `out` (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pcov::cli
