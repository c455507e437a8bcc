#pragma once

#include <iosfwd>

namespace qposet {

enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitBadInput = 2 };

/// Entry point of the `qposet` command. All output goes to `out`/`err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qposet
