#ifndef PREISACH_CLI_HPP
#define PREISACH_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace preisach {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitVerificationFailed = 1,
    kExitUsage = 2,
    kExitBudget = 3,
};

/// Runs the command-line tool on `args` (without the program name).
/// Output goes to `out` unless --out names a file.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace preisach

#endif  // PREISACH_CLI_HPP
