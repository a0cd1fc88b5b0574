#pragma once

#include <ostream>
#include <span>
#include <string>

namespace wrr::cli {

namespace exit_code {
inline constexpr int ok = 0;
/// Identity fails, instances disagree, divisors are not equivalent.
inline constexpr int finding = 1;
/// A library invariant was violated; a reproducer is printed.
inline constexpr int internal = 2;
inline constexpr int usage = 64;
inline constexpr int input = 65;
}  // namespace exit_code

/// Runs one command line (without the program name) and returns its exit
/// code. Reports go to `out`, diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace wrr::cli
