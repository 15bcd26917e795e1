#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lfw::cli {

enum ExitCode : int {
  kOk = 0,
  kNegative = 1,  // certified infeasible, obstructed, or a rejected witness
  kUsage = 2,
  kInternal = 3,
  kUndetermined = 4,
};

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics and usage text to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lfw::cli
