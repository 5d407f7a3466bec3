#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace igusa::cli {

enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,
  kParseError = 2,
  kNonRational = 3,
  kBadPrime = 4,
  kBudget = 5,
  kOtherError = 6,
};

// Runs one command line; args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace igusa::cli
