#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hg2::cli {

/// Exit codes: 0 success or Valid, 1 Invalid or no route, 2 usage or load
/// error.
enum ExitCode : int { kOk = 0, kInvalid = 1, kUsage = 2 };

/// Runs one invocation. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hg2::cli
