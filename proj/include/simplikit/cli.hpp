#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace simplikit {

inline constexpr int kExitOk = 0;
inline constexpr int kExitBadConfig = 2;
inline constexpr int kExitBackendFailure = 3;
inline constexpr int kExitValidationFailure = 4;

/// Entry point of the `simplikit` command. `args` excludes the program name.
/// Machine-readable output goes to `out` (or --out), summaries to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace simplikit
