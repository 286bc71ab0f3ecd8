#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kcycle {

/// Exit codes: 0 success, 1 a mathematical check failed, 2 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name). Documents go to
/// `out` (or to --out FILE), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kcycle
