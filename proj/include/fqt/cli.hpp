#ifndef FQT_CLI_HPP
#define FQT_CLI_HPP

#include <iosfwd>
#include <string_view>
#include <vector>

#include "fqt/polynomial.hpp"

namespace fqt::cli {

enum ExitCode : int { ok = 0, usage_error = 1, bound_violated = 2 };

/// Runs one command line (argv[0] is the program name). Reports go to out,
/// diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload for tests: args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Polynomial literal over the field; errors name the offending token.
Polynomial parse_poly(std::string_view literal, const FieldPtr& field);

/// "9" or "3^2" -> 9.
std::uint64_t parse_field_order(std::string_view text);

}  // namespace fqt::cli

#endif
