#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wgame::cli {

enum ExitCode : int {
  kSuccess = 0,
  kDomainError = 1,
  kParseError = 2,
  kDiffMismatch = 3,
};

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wgame::cli
