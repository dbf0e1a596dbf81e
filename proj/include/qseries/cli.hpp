#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "qseries/prodconv.hpp"

namespace qseries {

/// Exit codes of run_cli.
enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2 };

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses a product such as `q^2*JAC(0,5,infinity)^2/sqrt(JAC(1,5))`.
JacProduct parse_jac_product(std::string_view text);

}  // namespace qseries
