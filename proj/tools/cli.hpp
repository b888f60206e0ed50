#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bruhat::cli {

// Runs one command line (args excludes the program name). Returns 0 on
// success, 1 when a cap is exceeded, 2 on a usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bruhat::cli
