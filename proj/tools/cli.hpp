#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pwe::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

// Comma-separated integers; "" is the empty list. Throws ParseError.
std::vector<int> parse_int_list(const std::string& text);

// Runs one pwequiv invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pwe::cli
