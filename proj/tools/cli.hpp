#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kfs::cli {

enum ExitCode : int {
  kSuccess = 0,
  /// A check failed, a campaign reported FAIL, or inputs were rejected.
  kFailure = 1,
  kUsage = 2,
};

/// Runs the command line `args` (without the program name). Graph input is
/// read from `in` unless --in names a file; results go to `out` unless --out
/// names a file; diagnostics always go to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace kfs::cli
