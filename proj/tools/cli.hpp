#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qbcli {

/// Runs the command line `args` (program name excluded). Returns the exit
/// code: 0 pass, 1 property false or failure, 2 invalid input or hypothesis.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qbcli
