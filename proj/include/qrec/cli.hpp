#pragma once

#include <iosfwd>

namespace qrec {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,       // a check failed or output differs from the golden file
  kExitParse = 2,         // bad arguments or input files
  kExitBound = 3,         // dimension bound or enumeration cap exceeded
  kExitInconclusive = 4,  // a search threshold was hit
  kExitHypothesis = 5,    // a theorem's hypothesis does not hold
};

/// Entry point of the `qrec` tool, with injectable streams for testing.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qrec
