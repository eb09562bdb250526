#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tropbip::cli {

// Exit codes: 0 success or Yes, 1 No or a failed verification, 2 usage or
// structural error, 3 budget exceeded.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

// Runs one command line (without the program name), writing results to out
// and diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tropbip::cli
