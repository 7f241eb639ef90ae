#pragma once

namespace gabm {

// Exit codes are a stable contract for callers and scripts.
enum ExitCode {
  kExitOk = 0,
  kExitValidation = 1,
  kExitBackend = 2,
  kExitInternal = 3,
  kExitComparison = 4,
};

// Full command-line entry point (init | validate | run | report | bench).
// Returns the process exit code; never throws.
int run_cli(int argc, const char* const* argv);

}  // namespace gabm
