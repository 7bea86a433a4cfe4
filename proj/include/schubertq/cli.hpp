#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace schubertq::cli {

/// Runs one CLI invocation. `args` excludes the program name. Returns the
/// process exit code: 0 on success, 1 on a verification failure, 2 on a
/// usage error.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace schubertq::cli
