#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace moltm::cli {

enum ExitCode : int {
  kOk = 0,
  kOther = 1,
  kUsage = 2,
  kMachineError = 3,
  kVerificationFailed = 4,
  kSearchExhausted = 5,
};

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace moltm::cli
