#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace listcomb::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kCapacity = 3,
};

// Runs one command line (without the program name). Results go to `out`,
// diagnostics to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace listcomb::cli
