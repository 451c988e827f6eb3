#pragma once

#include <iosfwd>

namespace hausp {

/// Exit codes of the command-line tool.
enum ExitCode : int { kOk = 0, kDiffMismatch = 1, kUsage = 2, kParse = 3, kIo = 4 };

/// Runs `hausp-pg` with the given arguments (argv[0] is the program name).
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hausp
