#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nabla::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitSingular = 2;
/// verify exits with kExitVerifyBase + (1-based index of the first failed check).
inline constexpr int kExitVerifyBase = 10;

/// Runs the tool on argv-style arguments (args[0] is the program name).
/// Results go to `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nabla::cli
