#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace prodrec::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kParseError = 2,
  kPrecondition = 3,
  kInconsistent = 4,
};

/// Runs one command line (args excludes the program name). Results go to `out`, diagnostics
/// to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace prodrec::cli
