#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cellx::cli {

enum ExitCode : int {
  kOk = 0,
  kRelationFails = 1,
  kUsage = 2,
  kInvalidInput = 3,
  kGuardRefused = 4,
};

// args excludes the program name. Results go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cellx::cli
