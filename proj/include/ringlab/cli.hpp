#pragma once

#include <iosfwd>

namespace ringlab {

/// Process exit codes of the ringlab tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitValidation = 2,
  kExitCap = 3,
  kExitDisagreement = 4,
  kExitIo = 5,
};

/// Runs the ringlab command line. All output goes to `out` / `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ringlab
