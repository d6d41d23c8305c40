#pragma once

// Command-line front end. Everything here is a library so the tests can run
// commands in-process; su4euler.cpp only forwards argv.

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "su4/types.hpp"

namespace su4::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitIo = 1,
  kExitUsage = 2,
  kExitValidation = 3,
  kExitConsistency = 4,
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Real-valued expression with pi, + - * / ^, parentheses and
/// sqrt/sin/cos/tan/asin/acos/atan/exp/log, e.g. "pi/4" or "acos(1/sqrt(3))".
/// ArgumentError on malformed input or a non-finite result.
double parse_expression(std::string_view text);

/// Comma-separated list of expressions.
std::vector<double> parse_expression_list(std::string_view text);

/// Non-negative integer count; accepts "1000", "1e6" and "10^4" when the value
/// is integral.
long long parse_count(std::string_view text);

/// Four rows of eight reals (re im re im ...), '#' starts a comment, blank
/// lines ignored. ArgumentError on malformed content.
Matrix4c parse_matrix(std::istream& in);

/// Reads `path` (IoError when unreadable) and parses it.
Matrix4c read_matrix_file(const std::string& path);

/// Runs one command line (args exclude the program name). Normal output goes
/// to `out`, diagnostics to `err`. Returns an ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace su4::cli
