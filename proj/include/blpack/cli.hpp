#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace blpack {

/// Command dispatch for the blpack tool. `args` excludes the program name.
/// Exit codes: 0 success/SAT, 1 failed check/UNSAT, 2 UNKNOWN (resource
/// limit), 3 input or certificate error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace blpack
