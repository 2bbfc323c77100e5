#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace modmotif::cli {

enum ExitCode : int {
  kOk = 0,
  kNotFound = 1,
  kInputError = 2,
  kVerificationFailed = 3,
  kBudgetExceeded = 4,
};

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace modmotif::cli
