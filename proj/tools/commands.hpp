#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace negbeta::cli {

inline constexpr const char* kFormatVersion = "negbeta-output/1";

enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 2,
  kTruncation = 3,
  kVerificationFailed = 4,
};

/// Runs one verb; `args` excludes the program name. Results go to --out or `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace negbeta::cli
