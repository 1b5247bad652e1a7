#pragma once

#include <ostream>

namespace hfs::cli {

/// Exit codes: 0 success, 2 usage / domain / configuration error, 3 failed verify suite.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 2;
inline constexpr int kExitVerifyFailed = 3;

/// Entry point behind the `hfs` binary. Results go to out (or --out), diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hfs::cli
