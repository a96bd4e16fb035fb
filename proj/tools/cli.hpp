#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace computus::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name).
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace computus::cli
