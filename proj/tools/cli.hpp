#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace edrb::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kFileNotFound = 2,
  kParse = 3,
  kValidation = 4,
  kComputation = 5,
};

// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace edrb::cli
