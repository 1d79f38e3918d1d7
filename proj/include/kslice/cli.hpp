#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kslice::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInvalidInput = 1;
inline constexpr int kUnsupported = 2;
inline constexpr int kStepMismatch = 3;

/// Runs one command line (without the program name).  Results go to out,
/// diagnostics to err; the return value is the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "2,3,5" -> {2, 3, 5}; every value must be >= 1.  Throws InvalidInput.
std::vector<long> parse_degree_list(const std::string& text);

}  // namespace kslice::cli
