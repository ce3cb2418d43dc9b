// Command-line front end: compute, compare, selfcheck, graph.
//
// Exit codes: 0 success, 1 selfcheck failure, 2 parse error (arguments or
// input files), 3 validation error.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace btinv {

enum ExitCode : int { kExitOk = 0, kExitSelfcheck = 1, kExitParse = 2, kExitValidation = 3 };

/// Runs the CLI with argv-style arguments (args[0] is the program name).
/// Results go to out (or the --output file), diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace btinv
