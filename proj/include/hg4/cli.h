#ifndef HG4_CLI_H
#define HG4_CLI_H

#include <ostream>
#include <string>
#include <vector>

namespace hg4 {

/// Exit codes of the command-line front end.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;

/// Runs the `classify`, `query` or `verify` subcommand. `args` excludes the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace hg4

#endif
