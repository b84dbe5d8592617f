#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ztau::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 2;
inline constexpr int kCap = 3;
inline constexpr int kDomain = 4;
inline constexpr int kIo = 5;
inline constexpr int kInternal = 1;

// Runs the tool on `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ztau::cli
