#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace flatdim::cli {

// Runs one CLI invocation; `args` excludes the program name. Results go to
// `out`, diagnostics to `err`. Exit codes: 0 success, 1 usage error,
// 2 precondition violation, 3 verify-suite failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flatdim::cli
