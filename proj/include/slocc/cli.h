#pragma once

#include <ostream>

namespace slocc::cli {

/// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInequivalent = 2;
inline constexpr int kExitError = 3;

/// Default cap on qubit counts accepted from the command line.
inline constexpr int kDefaultMaxQubits = 26;

/// Entry point behind the `slocc` binary. JSON goes to `out`, diagnostics to `err`.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace slocc::cli
