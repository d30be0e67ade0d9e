#pragma once

#include <iosfwd>

namespace tangle::cli {

enum ExitCode : int {
  kSuccess = 0,
  kFalse = 1,
  kUsage = 2,
  kBudget = 3,
};

// Parses argv (argv[0] is the program name) and runs one verb. Results go to
// `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tangle::cli
