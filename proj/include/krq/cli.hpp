#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace krq {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInconsistent = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Payload goes to `out`,
/// diagnostics and --progress messages to `err`. Worker threads come from
/// KRQ_THREADS.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace krq
