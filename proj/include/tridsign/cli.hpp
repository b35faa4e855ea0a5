#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tridsign {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitVerificationFailed = 1,
    kExitUsage = 2,
    kExitNumerical = 3,
    kExitIo = 4,
};

/// Runs the CLI on args (args[0] is the program name). Data written without
/// --out goes to out; diagnostics and summaries go to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tridsign
