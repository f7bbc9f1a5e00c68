#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace drinfeld::cli {

inline constexpr const char* kSchema = "drinfeld/1";

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,     // parse or validation failure
  kResource = 3,  // work bound or precision exhausted
  kDomain = 4,    // mathematical precondition violated
};

// Runs one CLI invocation; args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace drinfeld::cli
