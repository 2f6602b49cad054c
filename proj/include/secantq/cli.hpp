#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace secantq {

enum ExitCode : int {
  kExitOk = 0,
  kExitInvariantFailure = 1,
  kExitParseError = 2,
  kExitDegenerate = 3,
  kExitUsage = 64,
};

// Spread of the three quotient formulas tolerated per sweep row / secant report.
inline constexpr double kAgreementTolerance = 1e-10;

/// Runs the command line (without the program name). Reports go to `out`
/// unless --out names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace secantq
