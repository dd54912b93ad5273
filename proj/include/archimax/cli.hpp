#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace archimax::cli {

enum ExitCode : int {
  kPass = 0,
  kFail = 1,
  kUsage = 2,
  kUnwritable = 3,
  kInconclusive = 4,
};

/// Runs the command line `args` (without the program name). Reports go to `out` unless
/// --out names a file; diagnostics and usage text go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace archimax::cli
