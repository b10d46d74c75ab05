#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hodgepoly {

// Runs one command line (without the program name) and returns the exit
// code. Normal output goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hodgepoly
