#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace binoidal::cli {

/// Exit codes of the command-line front end.
enum ExitCode : int { kOk = 0, kUsage = 1, kUndecided = 2, kPrecondition = 3 };

/// Runs one command. `args` excludes the program name; `in` is read when a
/// presentation argument is "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace binoidal::cli
