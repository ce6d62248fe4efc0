#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace asymcolor {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,           // colored / verified true / found
  kExitError = 1,        // usage or input error
  kExitNegative = 2,     // exceptional / verified false / none
  kExitUnsupported = 3,  // outside the characterised scope
};

/// Runs one command. args excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace asymcolor
