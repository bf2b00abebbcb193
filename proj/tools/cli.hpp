#ifndef IMTL_TOOLS_CLI_HPP
#define IMTL_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace imtl::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kHolds = 0,
    kFails = 1,
    kInputError = 2,
    kTimeout = 3,
};

/// Runs the command line `args` (without the program name), writing normal
/// output to `out` and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace imtl::cli

#endif  // IMTL_TOOLS_CLI_HPP
