#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rwa {

// Exit codes are a stable contract: 0 success, 1 usage, 2 parse/validation,
// 3 negative verdict (nonlinear / not equal), 4 budget exhausted where
// exactness was requested.
enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 1,
    exit_invalid = 2,
    exit_negative = 3,
    exit_exhausted = 4,
};

// The whole command surface; main() is a thin wrapper. Results go to out,
// diagnostics and human-readable side tables to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace rwa
