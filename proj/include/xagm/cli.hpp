#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace xagm::cli {

enum ExitCode : int {
  kOk = 0,
  kValidation = 2,
  kNonConvergence = 3,
  kVerificationFailed = 4,
};

/// Runs one command line (without the program name) and returns the exit
/// code.  Results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace xagm::cli
