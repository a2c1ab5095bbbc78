#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cliffq::cli {

// Runs the command line (args excludes the program name). Returns the exit
// status: 0 success, 1 user error, 2 internal invariant failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cliffq::cli
