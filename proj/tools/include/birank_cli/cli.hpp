#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace birank::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (program name excluded). Results go to `out`
/// unless a subcommand is told to write files; diagnostics go to `err`.
/// Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace birank::cli
