// Command-line front end.  Exit codes: 0 success, 1 invalid input, 2 failed
// internal check.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace redalg::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace redalg::cli
