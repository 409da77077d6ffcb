#pragma once

// Command-line front end. Exit codes: 0 found or certified, 2 not found
// within caps, 1 input error.

#include <iosfwd>
#include <string>
#include <vector>

namespace bptk::cli {

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bptk::cli
