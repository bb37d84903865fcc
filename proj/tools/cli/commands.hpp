#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace amgm::cli {

/// Process exit codes of the amgm tool.
enum ExitCode : int {
  kExitOk = 0,         ///< success, inequality chain verified
  kExitViolation = 1,  ///< an inequality failed beyond tolerance
  kExitInvalid = 2,    ///< unreadable input, invalid data or invalid flags
};

/// Runs the tool on `args` (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace amgm::cli
