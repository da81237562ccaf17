#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "pentagram/error.hpp"

namespace pentagram::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitBadArguments = 2,
  kExitGenerationFailed = 3,
  kExitDegenerateGeometry = 4,
  kExitStructureMismatch = 5,
  kExitChartFailure = 6,
};

int exit_code_for(ErrorCode code);

// args excludes the program name. JSON and SVG go to `out` unless --output
// names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pentagram::cli
