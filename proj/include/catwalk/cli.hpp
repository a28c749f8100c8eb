#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace catwalk {

/// Runs one CLI invocation (args excludes the program name). Exit codes:
/// 0 success, 1 a verification reported false, 2 usage or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace catwalk
