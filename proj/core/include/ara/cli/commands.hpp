#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ara::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitRuntime = 1,
  kExitValidation = 2,
  kExitInfeasible = 3,
};

/// Parses `args` (without the program name), runs the subcommand and writes
/// its reports. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv);

}  // namespace ara::cli
