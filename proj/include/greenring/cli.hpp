#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace greenring {

enum ExitCode { ExitOk = 0, ExitInvalidInput = 1, ExitVerificationFailed = 2 };

/// Runs the command line `args` (program name first) and returns the exit code.
/// Reports go to `out` unless --out names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace greenring
