#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "lo/knot_group.hpp"

namespace lo {

// Exit codes.
inline constexpr int kExitOk = 0;            // checks passed, or Unsat certified
inline constexpr int kExitInconclusive = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitVerification = 3;
inline constexpr int kExitSat = 4;           // cone search found a consistent truncated assignment

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Hypothesis expressions: mu, lambda, s, a, b, letter words (aB...), 1, ^, *, parentheses.
// Peripheral symbols need a knot group; kg may be null for a bare presentation.
Word parse_expression(const std::string& text, const KnotGroup* kg);

// "3", "1..4", "1,3,5" or "1..3,7".
std::vector<int> parse_int_range(const std::string& text);

}  // namespace lo
