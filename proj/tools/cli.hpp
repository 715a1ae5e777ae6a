#pragma once

#include <iosfwd>

namespace ortholog::cli {

// Exit codes: 0 pass, 1 verification failure, 2 usage or input error.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

// Runs the command line in-process; reports go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ortholog::cli
