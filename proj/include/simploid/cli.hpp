#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace simploid {

enum ExitCode : int {
  kExitTrue = 0,
  kExitFalse = 1,
  kExitInvalidInput = 2,
  kExitInsufficientTruncation = 3,
  kExitTimeout = 4,
  kExitInternal = 5,
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// args excludes the program name
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace simploid
