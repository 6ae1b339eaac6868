#pragma once

#include <iosfwd>

namespace hurwitz::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the hurwitz-lab command line. Commands: eval, verify,
/// sweep. Returns 0 on success, 1 on numerical or gated failure, 2 on
/// usage errors. Never throws.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hurwitz::cli
