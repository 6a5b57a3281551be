#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sylowkit::cli {

/// Exit codes: all checks passed, some check failed, bad usage or resource
/// limit hit.
enum ExitCode : int { kPass = 0, kCheckFailure = 1, kUsage = 2 };

/// Runs one command; `args` excludes the program name. Reports go to `out`,
/// diagnostics and usage text to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sylowkit::cli
