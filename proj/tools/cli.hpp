#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lensspec::cli {

inline constexpr int kSchemaVersion = 1;

enum ExitCode : int { kTrue = 0, kFalse = 1, kUsage = 2, kHypothesis = 3 };

/// Runs one command line (args[0] is the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lensspec::cli
