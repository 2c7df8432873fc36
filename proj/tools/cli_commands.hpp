#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace padic::cli {

enum ExitCode : int {
    kOk = 0,
    kMismatch = 1,
    kBadArguments = 2,
    kBudgetExceeded = 3,
    kNotRational = 4,
};

/// Runs the command line (without the program name). Data goes to out,
/// diagnostics to err; returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace padic::cli
