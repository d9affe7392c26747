#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sinecone::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kVerificationFailed = 2,
  kUnboundedBelow = 3,
  kInvalidInput = 4,
};

// args excludes the program name
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sinecone::cli
