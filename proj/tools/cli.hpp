#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace vtm::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailures = 1;  // validation conflicts, claim failures
inline constexpr int kExitParseError = 2;  // unreadable or unparseable input
inline constexpr int kExitUsage = 3;

// Runs the CLI with the given arguments (excluding the program name),
// writing reports to `out` and diagnostics to `err`. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace vtm::cli
