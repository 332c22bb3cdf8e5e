#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bisfan {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitUsage = 2, kExitDomain = 3, kExitInvariant = 4 };

/// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bisfan
