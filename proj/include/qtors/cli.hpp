#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qtors {

/// Runs the command line tool on `args` (without the program name).
/// Returns 0 on success, 1 when a check fails, 2 on a usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qtors
