#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vknot::cli {

// Runs one command line (without the program name). Returns the process exit
// status: 0 success, 1 domain error, 2 usage or syntax error. Errors are
// written to `err` as one JSON object per line.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vknot::cli
