#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace icg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

// Runs one command line (without the program name). Reports go to out as one
// JSON document (plain text for `route` without --json); diagnostics and
// timings go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace icg::cli
