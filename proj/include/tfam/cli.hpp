#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tfam::cli {

/// Runs one CLI invocation. `args` excludes the program name.
/// Exit codes: 0 success, 1 a verification claim failed, 2 bad arguments or input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tfam::cli
