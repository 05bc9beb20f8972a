#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chromgf::cli {

enum ExitCode : int {
  kOk = 0,
  kUsageError = 1,
  kComputationError = 2,
  kVerificationFailed = 3,
};

/// Runs one command line (without the program name).  Results go to `out`,
/// diagnostics and -v progress to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chromgf::cli
