#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gcolor::cli {

// Exit codes: machine-parseable, stable.
inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCapability = 3;

/// Runs one invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gcolor::cli
