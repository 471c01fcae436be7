#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ttg::cli {

enum ExitCode : int { ok = 0, check_failed = 1, parse_error = 2, bound_exceeded = 3 };

/// Runs one command line (without the program name). The JSON report goes to
/// --out when given, otherwise to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ttg::cli
