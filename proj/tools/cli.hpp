#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace linfor::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

/// Runs one command line (without the program name). Reports and records go to
/// `out`, diagnostics and progress to `err`; `in` backs "--in -".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace linfor::cli
