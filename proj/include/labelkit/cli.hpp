#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace labelkit {

inline constexpr const char* kVersion = "0.1.0";

/// Exit statuses of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitAuditFailed = 1, kExitUsage = 2 };

/// Runs the tool on `args` (without the program name). Reports go to `out`,
/// diagnostics and usage text to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace labelkit
