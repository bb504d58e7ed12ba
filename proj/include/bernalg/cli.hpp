#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bernalg {

/// Runs the command line `args` (without the program name) and returns the
/// exit status: 0 ok, 1 property-check failure, 2 input error.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace bernalg
