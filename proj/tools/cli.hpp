#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace quintrank::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kData = 3 };

/// Runs one invocation. `args` excludes the program name. The result
/// document goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quintrank::cli
