#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace secrecy::cli {

enum ExitCode : int {
  kSuccess = 0,
  kValidationFailure = 1,
  kUsageError = 2,
  kIoError = 3,
};

/// Runs the command line `args` (without the program name). Data goes to `out`,
/// diagnostics to `err`. Returns one of ExitCode.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace secrecy::cli
