#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mmds {

/// Exit statuses of the command-line front end. A decided instance exits 0
/// whatever the verdict; the verdict itself is the first output line.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitInput = 3,         // unreadable file, malformed graph/CNF/set
  kExitPrecondition = 4,  // wrong graph class, bad modulator, size cap
};

/// Runs the `mmds` command line on `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mmds
