#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gwitt {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitMathFailure = 1, kExitUsage = 2 };

/// Runs the command line `args` (without the program name). Reports go to
/// out, diagnostics to err; `in` backs file arguments given as "-".
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace gwitt
