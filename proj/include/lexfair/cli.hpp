#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lexfair {

// Runs the command-line front end on the given argument list (without the
// program name). Writes results to `out` and diagnostics to `err`.
//
// Exit codes: 0 = success / property passes; 1 = property fails or no
// allocation exists; 2 = usage or input error (the first line on `err` is a
// stable machine-readable token, followed by a human-readable explanation).
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace lexfair
