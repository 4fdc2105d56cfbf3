#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace flasque {

/// Runs the command line (without the program name). Returns 0 when every
/// check passes, 1 on a failed check and 2 on usage or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flasque
