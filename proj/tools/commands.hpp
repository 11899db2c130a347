#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "geodisc/domains.hpp"

namespace geodisc::cli {

enum ExitCode : int { kSuccess = 0, kPrecondition = 2, kDivergence = 3, kHypothesis = 4 };

/// Comma-separated complex coordinates, each "a", "bi", "a+bi" or "a-bi".
CVec parse_point(const std::string& text);

/// Runs one command line (without the program name). The JSON report goes to
/// --out when given, otherwise to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace geodisc::cli
