#pragma once

#include <iosfwd>

namespace gincomplex {

enum ExitCode : int {
  kExitOk = 0,
  kExitMismatch = 1,
  kExitUsage = 2,
  kExitUnstable = 3,
};

/// Entry point of the `gincomplex` tool. Writes reports to `out` and
/// diagnostics to `err`; returns the process exit code.
int runCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gincomplex
