#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace epi::cli {

enum Exit : int {
  kOk = 0,
  kParse = 2,
  kContract = 3,
  kMismatch = 4,
};

// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace epi::cli
