#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chroma::cli {

/// Stable process exit codes.
enum ExitCode : int {
  kOk = 0,
  kMismatch = 2,   // two counting methods disagreed
  kViolation = 3,  // a checked inequality failed
  kUsage = 64,
  kCap = 65,
};

inline constexpr const char* kVersion = "chroma 0.1.0";

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace chroma::cli
