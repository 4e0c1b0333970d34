#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polyb::cli {

enum ExitCode : int {
  kSuccess = 0,
  kMismatch = 1,
  kUsage = 2,
  kNetwork = 3,
  kResource = 4,
};

/// Runs pbtool with `args` (args[0] is the program name). Data goes to
/// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polyb::cli
