#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace monohs::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kError = 1;
inline constexpr int kNegative = 2;  // a valid NO / Empty answer
inline constexpr int kUsage = 64;
inline constexpr int kFileError = 66;

// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace monohs::cli
