#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace t3lab::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitBoundFailure = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitResource = 3;

// Runs one command. args excludes the program name. JSON goes to out, the
// human summary to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace t3lab::cli
