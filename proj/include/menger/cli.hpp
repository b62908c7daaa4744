#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace menger::cli {

  enum ExitCode : int {
    kOk        = 0,
    kViolation = 1,
    kBadInput  = 2,
    kCapped    = 3,
  };

  // Runs one command line (program name first). Never throws.
  int run(std::vector<std::string> const& argv, std::ostream& out, std::ostream& err);

}  // namespace menger::cli
