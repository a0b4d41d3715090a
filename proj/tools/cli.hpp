#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bubble::cli {

/// Exit codes: 0 success, 1 a check failed, 2 usage error, 3 resource cap.
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCap = 3;

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bubble::cli
