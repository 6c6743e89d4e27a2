#pragma once

#include <string>
#include <vector>

namespace sparsebody {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;
inline constexpr int kExitNumeric = 3;

/// Runs one command line (without the program name) and returns its exit code.
/// Errors are reported through the logger, never thrown. The log level comes
/// from SPARSEBODY_LOG_LEVEL (trace, debug, info, warn, error, off).
int run_cli(const std::vector<std::string>& args);

}  // namespace sparsebody
