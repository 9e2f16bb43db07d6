#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ramsey::cli {

// Runs one subcommand.  args excludes the program name.
// Exit codes: 0 success, 1 validation failure, 2 usage or file error.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace ramsey::cli
