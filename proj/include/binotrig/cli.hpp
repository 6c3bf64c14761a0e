#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace binotrig::cli {

enum ExitCode : int {
    kExitOk = 0,
    /// Malformed flags, unknown table id, or a failed verification.
    kExitUsage = 1,
    /// Pole, or a non-integer exponent with |phi| >= pi.
    kExitDomain = 2,
    kExitBudget = 3,
};

/// Runs one invocation; `args` excludes the program name. Records go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace binotrig::cli
