#pragma once

#include <string>
#include <vector>

namespace trialg::cli {

struct Outcome {
  int exit_code = 0;  // 0 ok, 1 input error, 2 TheoremViolation
  std::string out;    // JSON report (or help text)
  std::string err;    // one-line diagnostic
};

/// args excludes the program name.
Outcome run(const std::vector<std::string>& args);

}  // namespace trialg::cli
