#pragma once

#include <iosfwd>

namespace repcount::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kOk = 0,
    kViolation = 1,      // prediction failed or an internal check fired
    kUsage = 2,          // bad flags, bad pattern, argument outside a domain
    kBudgetExceeded = 3,
};

/// Runs the command line with the given argv (argv[0] is the program name).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace repcount::cli
