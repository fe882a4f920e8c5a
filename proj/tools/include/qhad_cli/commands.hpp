#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qhad::cli {

enum ExitCode : int { kOk = 0, kFailed = 1, kUsage = 2 };

/// Runs one `qhad` invocation in-process. `args` excludes the program name;
/// `in` backs the "-" file argument.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace qhad::cli
