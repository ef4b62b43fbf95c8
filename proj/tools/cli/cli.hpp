#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace biinterval::cli {

/// Exit codes: success or pass, a verification that ran and failed, bad usage.
enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitUsage = 2 };

/// Runs one command line (args excludes the program name). Reports go to
/// out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace biinterval::cli
