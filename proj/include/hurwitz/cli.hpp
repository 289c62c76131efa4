#pragma once

#include <iosfwd>

namespace hurwitz {

// Exit codes of the command-line tool.
enum ExitCode { exit_ok = 0, exit_failed = 1, exit_usage = 2, exit_budget = 3 };

// Runs hurwitz-lab with the given arguments (argv[0] is the program name).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hurwitz
