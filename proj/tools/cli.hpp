#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pafp::cli {

// Runs the command line given the arguments after the program name, writing
// to the supplied streams. Returns the process exit code: 0 for a completed
// decision/output, 2 for input errors, 3 for precondition or budget
// failures.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pafp::cli
