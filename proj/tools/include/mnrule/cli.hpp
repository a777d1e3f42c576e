#pragma once

#include "mnrule/quantum.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace mnrule::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2 };

/// Runs the command line `args` (without the program name) and returns the
/// process exit code. Results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The built-in worked examples. With `mutate_het` the Schubert example is
/// re-signed with (-1)^het instead of (-1)^(het+1); the report must then fail.
CheckReport selfcheck(bool mutate_het = false);

}  // namespace mnrule::cli
