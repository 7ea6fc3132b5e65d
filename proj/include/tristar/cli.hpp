#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tristar::cli {

enum ExitCode : int {
    kSuccess = 0,
    kFailure = 1, // verification failure, theorem violation, exhaust violation
    kUsage = 2,   // usage or parse error
};

/// Runs the command line with explicit streams. "-" as a path means `in`
/// for inputs and `out` for outputs.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

} // namespace tristar::cli
