#pragma once

#include <iosfwd>

namespace fock::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitNegative = 1;  // a mathematical verdict failed
inline constexpr int kExitUsage = 2;     // bad flags, unreadable input, infeasible sizes

/// Entry point of the `fockbench` tool. Reports go to the file named by
/// --report/--out when given (written atomically), otherwise to `out`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fock::cli
