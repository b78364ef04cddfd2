#pragma once

#include <iosfwd>

namespace eqlc {

// Exit codes shared by every subcommand.
enum ExitCode : int {
    kExitOk = 0,
    kExitMismatch = 1,
    kExitInvalid = 2,
    kExitResource = 3,
};

/// Entire command-line surface; `main` only forwards to this.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace eqlc
