#pragma once

#include <iosfwd>

namespace coxkl {

// Exit status: 0 success / all checks pass, 1 check or invariant failure,
// 2 usage error.
enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitUsage = 2 };

// Entry point of the `coxkl` command-line tool; writes to the given streams
// instead of the process stdout/stderr so it can be driven from tests.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace coxkl
