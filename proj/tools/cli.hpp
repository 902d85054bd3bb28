#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace feyncount::cli {

/// Exit codes: 0 success, 1 a check failed or methods disagreed,
/// 2 bad input or refused request.
enum ExitCode : int { kOk = 0, kCheckFailed = 1, kInputError = 2 };

/// Runs the command line; data goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace feyncount::cli
