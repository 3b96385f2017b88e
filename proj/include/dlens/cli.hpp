#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dlens::cli {

enum ExitStatus : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsageError = 2,
  kNotSaturated = 3,
};

/// Runs one command. `args` excludes the program name. The result document
/// goes to --out or `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dlens::cli
