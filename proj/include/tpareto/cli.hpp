#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tpareto {

// Runs the command-line front end on the given arguments (program name
// excluded). Reads stdin through `input` when no --input file is given.
// Returns the process exit code: 0 success, 1 input error, 2 model violation.
int run_cli(const std::vector<std::string>& args, std::istream& input,
            std::ostream& out, std::ostream& err);

} // namespace tpareto
