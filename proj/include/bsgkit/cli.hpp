#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bsg {

enum ExitCode : int { kExitOk = 0, kExitError = 1, kExitFail = 2, kExitUsage = 64 };

/// Runs one bsgkit invocation. args[0] is the program name. JSON results go
/// to `out` (or the --out file), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bsg
