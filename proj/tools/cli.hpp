#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kbound::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kIoError = 3,
};

/// Runs the command line; `args` excludes the program name. Output that is not
/// redirected with --out goes to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kbound::cli
