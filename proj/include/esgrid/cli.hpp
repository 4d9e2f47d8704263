#pragma once

#include <iosfwd>

namespace esgrid {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the `esgrid` tool. Subcommands: gen, verify, render, stats.
/// Returns kExitUsage for bad arguments or unreadable input,
/// kExitVerificationFailed when `verify` refutes a promised property.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int cli_main(int argc, const char* const* argv);

}  // namespace esgrid
