#pragma once

#include <iosfwd>

namespace gli::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

/// Entry point of the `gli` tool: payoff | sweep-tau | heatmap | verify |
/// simulate. Single results go to `out`, tables to --out (or `out` when
/// --out is "-"), diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gli::cli
