// Command-line front end: `sincstab oseen | bounds | table | gram | reconstruct`.

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sincstab::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int {
  kOk = 0,
  kNotConverged = 1,  // a numerical kernel missed its tolerance
  kUsageError = 2,    // bad flags or a domain error
};

/// Runs one invocation. `args` excludes the program name. Normal output
/// goes to `out` (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sincstab::cli
