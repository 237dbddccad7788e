#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace skeinforge::cli {

// Runs the command line given argv-style arguments (without the program
// name).  Exit codes: 0 success, 1 verification inequality, 2 parse or
// usage error, 3 engine error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skeinforge::cli
