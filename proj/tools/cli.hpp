#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ternary::cli {

enum ExitCode : int {
  kSolvable = 0,
  kInvalidInput = 1,
  kUnsolvable = 2,
};

/// Runs one invocation. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ternary::cli
