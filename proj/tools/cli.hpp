#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qe::cli {

enum ExitCode : int { ok = 0, domain_error = 1, usage_error = 2 };

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qe::cli
