#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ptfree::cli {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 1,
    exit_not_pt_free = 2,
    exit_invariant = 3,
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ptfree::cli
