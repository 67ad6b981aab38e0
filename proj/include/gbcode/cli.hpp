#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gbcode {

/// Exit statuses of run_cli.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitMismatch = 3;

/// Entry point of the `gbcode` tool. `args` excludes the program name.
/// Subcommands: distance, wdist, ddist, pairs, bench, oracle-demo, selftest,
/// bound.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gbcode
