#pragma once

#include <iosfwd>

namespace diplace {

/// Exit codes of the command-line tool.
enum ExitCode { kExitOk = 0, kExitVerification = 1, kExitInput = 2 };

/// Runs the diplace command line. Output goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace diplace
