#pragma once

#include <exception>
#include <iosfwd>
#include <string>
#include <vector>

namespace orthopara::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 2,     // bad arguments, unreadable or malformed input
    exit_internal = 3,  // an invariant check failed
};

/// Run the command line `args` (args[0] is the program name).  Machine
/// output goes to `out` unless --output names a file; diagnostics go to
/// `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Exit code for an exception escaping a subcommand.
int exit_code_for(const std::exception_ptr& error, std::ostream& err);

}  // namespace orthopara::cli
