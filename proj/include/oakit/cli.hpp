#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oakit::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kValidation = 2,
  kAnchoring = 3,
  kParse = 4,
};

/// Runs one command. argv excludes the program name. Reports go to out,
/// diagnostics to err.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace oakit::cli
