#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace catspec::cli {

enum ExitCode : int { kSuccess = 0, kUsage = 1, kVerificationFailed = 2, kNonConvergence = 3 };

/// Full command-line entry point; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace catspec::cli
