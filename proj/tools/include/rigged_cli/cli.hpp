#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rigged::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (args[0] is the program name). Normal output goes
/// to `out`, diagnostics to `err`; the return value is the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rigged::cli
