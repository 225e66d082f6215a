#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace expmap::cli {

enum ExitCode : int { kSuccess = 0, kMathFailure = 1, kInputError = 2 };

/// Runs one command line (without the program name). Returns 0 on success,
/// 1 on a mathematical failure and 2 on malformed input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace expmap::cli
