#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qjalg {

/// Runs one command line (args excludes the program name). Returns the exit code:
/// 0 success, 1 evaluation or verification failure, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qjalg
