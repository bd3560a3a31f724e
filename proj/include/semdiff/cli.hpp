#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace semdiff::cli {

inline constexpr int kExitSame = 0;
inline constexpr int kExitDifferent = 1;
inline constexpr int kExitError = 2;

/// Runs one `semdiff` invocation. `args` excludes the program name.
/// Results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace semdiff::cli
