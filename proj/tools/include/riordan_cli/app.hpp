#pragma once

#include <ostream>

namespace riordan::cli {

/// Exit statuses of the riordan tool.
enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kInputError = 3 };

/// Runs the command line; output goes to out, diagnostics to err.
int run_app(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace riordan::cli
