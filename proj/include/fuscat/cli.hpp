#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fuscat {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kMalformedInput = 2,
  kRouteDisagreement = 3,
  kResourceLimit = 4,
};

/// Runs `fuscat` on `args` (program name excluded), writing results to `out`
/// unless --out is given and diagnostics to `err`. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fuscat
