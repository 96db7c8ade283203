#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cyclecon::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kParse = 3,
  kBudget = 4,
  kOracleMismatch = 5,
};

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cyclecon::cli
