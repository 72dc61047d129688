#pragma once

#include <iosfwd>

namespace sepdfa {

// Stable exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitParse = 2,
  kExitSolver = 3,
  kExitTimeout = 4,
  kExitVerification = 5,
  kExitInternal = 6,
};

/// Entry point of the `sepdfa` tool with subcommands mine, gen-parity,
/// gen-random, verify and stats. Never throws; returns an ExitCode.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sepdfa
