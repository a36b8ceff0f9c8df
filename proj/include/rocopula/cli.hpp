#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rocopula::cli {

enum ExitCode : int { kOk = 0, kTheoremFail = 1, kInputError = 2, kNumericError = 3 };

/// Runs the command line `args` (without the program name). Normal output
/// goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rocopula::cli
