#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace swarmctl::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitSolver = 2;

/// Runs one swarmctl invocation. `args` excludes the program name. Artifacts go
/// to `out` unless --out names a file; diagnostics go to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace swarmctl::cli
