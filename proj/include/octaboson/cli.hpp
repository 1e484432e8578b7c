#pragma once

#include <exception>
#include <iosfwd>
#include <string>
#include <vector>

namespace octaboson {

enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitNotDivisible = 2, kExitBudget = 3 };

/// Exit code of an exception escaping a command: 2 for a divisibility failure, 3 for a budget
/// overrun, 1 otherwise.
int exit_code_for(const std::exception& error);

/// Short machine-readable name of the exception class ("genericity", "budget", ...).
std::string error_kind(const std::exception& error);

/// Runs the command line `args` (without the program name); reports go to `out`, or to the
/// --out file, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace octaboson
