#ifndef LACVER_TOOLS_CLI_HPP
#define LACVER_TOOLS_CLI_HPP

#include <iosfwd>
#include <string_view>
#include <vector>

namespace lacver::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// "a:b:n" -> n evenly spaced values from a to b inclusive. Throws
/// std::invalid_argument on malformed input.
std::vector<double> parse_grid(std::string_view spec);

/// "0,1,3" -> {0, 1, 3}; nonnegative integers only.
std::vector<int> parse_int_set(std::string_view spec);

/// Runs the command line. Subcommands: list, verify, sweep, terms, check.
/// Reads LACVER_MAX_TERMS and LACVER_TOL for defaults; flags take precedence.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lacver::cli

#endif  // LACVER_TOOLS_CLI_HPP
