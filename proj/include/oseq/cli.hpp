#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oseq {

// Exit codes of the oseq tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;  // not realized, or a check failed
inline constexpr int kExitUsage = 2;     // malformed input or flags
inline constexpr int kExitInternal = 3;

// Runs one invocation; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oseq
