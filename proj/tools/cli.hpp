#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rieffel::cli {

/// Exit codes: 0 success, 1 property violation, 2 input/schema error,
/// 3 dimension or structure error.
enum ExitCode : int { kOk = 0, kViolation = 1, kSchemaError = 2, kDimensionError = 3 };

/// Runs one command. `args` excludes the program name. Results go to the
/// --out file when given, else to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rieffel::cli
