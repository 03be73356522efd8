#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace uniseq::cli {

enum ExitCode : int {
    holds = 0,   // verdict holds, system solved, command succeeded
    fails = 1,   // verdict fails or no solution
    usage = 2,   // bad flags or bad input
};

/// Runs one command. `args` excludes the program name. Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace uniseq::cli
