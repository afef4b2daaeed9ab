#pragma once

/**
 * @file cli.hpp
 * @brief The `lgvsym` command-line driver.
 *
 * Subcommands: schur, verify, suite, paths, render. Exit codes are 0 for
 * success or VERIFIED, 1 for MISMATCH, ERROR or a refused oversized
 * enumeration, and 2 for usage and configuration errors.
 */

#include <iosfwd>
#include <string>
#include <vector>

namespace lgvsym::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Same, with argv[0] supplied.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lgvsym::cli
