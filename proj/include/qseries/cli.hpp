#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qseries {

/// Runs the command line front end. `args` excludes the program name.
/// Returns 0 when every requested check passes, 1 on a failed check or an
/// evaluation error, and 2 on a usage or parse error.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace qseries
