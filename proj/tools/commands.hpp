#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eulerhall::cli {

inline constexpr const char* kVersion = "1.0.0";

enum ExitCode : int {
  kSuccess = 0,
  kInputError = 1,
  kInvariantViolation = 2,
};

/// Entry point shared by the executable and the tests. args[0] is the
/// program name. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eulerhall::cli
