#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace starramsey::cli {

enum ExitCode : int { Success = 0, Failure = 1, UsageError = 2 };

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace starramsey::cli
