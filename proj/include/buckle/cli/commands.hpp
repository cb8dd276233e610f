#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace buckle::cli {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kPass = 0,
  /// An inequality or bound failed, or the solver could not produce a result.
  kViolation = 1,
  /// Bad flags, unreadable input, or a schema mismatch.
  kUsage = 2,
};

/// Runs one command line (without the program name), e.g.
/// {"solve", "--domain", "interval", "--out", "s.json"}. Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace buckle::cli
