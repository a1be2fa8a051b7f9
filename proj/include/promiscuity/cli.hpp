// cli.hpp
// Command-line front end. Subcommands:
//   fourmode report --a A --s S [--format json|csv]
//   fourmode sweep [--a-range LO HI] [--s-range LO HI] [--steps N] --out PATH
//   qudit report --d D [--format json|csv]
//   verify [--grid-density N] [--verbose]
// A key=value file given with --config supplies option defaults; explicit
// flags win. PROMISCUITY_THREADS caps the sweep worker count.
//
// Exit codes: 0 success, 1 failed verification / inconsistent report / I/O
// error, 2 invalid arguments.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace promiscuity::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Worker count for sweeps: PROMISCUITY_THREADS if set to a positive
/// integer, else the hardware concurrency (at least 1).
unsigned sweep_threads();

}  // namespace promiscuity::cli
