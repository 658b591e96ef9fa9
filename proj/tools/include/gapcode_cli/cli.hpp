#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gapcode::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 1,
    exit_data = 2,
    exit_verify = 3,
};

/// Runs one invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace gapcode::cli
