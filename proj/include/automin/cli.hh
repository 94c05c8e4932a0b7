#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace automin::cli {

/// Process exit codes.
enum ExitCode : int {
    success = 0,          ///< done, or the predicate holds
    predicate_false = 1,
    usage_error = 2,      ///< bad arguments, unreadable or malformed input
    internal_error = 3,   ///< an invariant check failed
};

/// Runs the command line `args` (without the program name). Input files
/// named `-` are read from `in`; results go to `out` unless `-o` is given.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace automin::cli
