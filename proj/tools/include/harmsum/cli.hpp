#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "harmsum/registry.hpp"

namespace harmsum::cli {

enum class OutputMode { Text, Json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct FormatOptions {
  /// Writes elapsed times as 0 so repeated runs print identical output.
  bool omit_timing = false;
};

/// Text: aligned table of id, params, matched digits, status and ms.
/// JSON: array of objects with exactly the fields id, params, lhs, rhs,
/// matched_digits, method, elapsed_ms, status; numbers are decimal strings.
std::string format_report(const std::vector<VerificationReport>& reports, OutputMode mode,
                          FormatOptions options = {});

/// Inverse of the JSON form of format_report. Throws ParseError.
std::vector<VerificationReport> parse_reports(std::string_view json);

/// Parses "name=value" with an exact rational value. Throws ParseError.
std::pair<std::string, Rational> parse_binding(std::string_view text);

/// Runs the command line `args` (args[0] is the program name) and returns the
/// exit code: 0 all pass, 1 any verification fail or error, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace harmsum::cli
