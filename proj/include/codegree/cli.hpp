#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace codegree::cli {

/// Exit codes: 0 all checks pass, 1 a violation / failure / equality where
/// strictness is claimed, 2 usage or input error.
inline constexpr int kOk = 0;
inline constexpr int kViolation = 1;
inline constexpr int kUsage = 2;

/// Runs the command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace codegree::cli
