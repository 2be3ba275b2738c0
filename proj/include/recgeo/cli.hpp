#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace recgeo::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitPrecondition = 2;

/// Entry point for the `recgeo` tool.  `args` excludes the program name.
/// Subcommands: eval, classify, primes, example, search.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace recgeo::cli
