#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace iqh {

inline constexpr const char* kVersion = "0.1.0";

/// Runs one CLI invocation. Writes the JSON report to `out`, diagnostics
/// to `err`. Returns 0 on success, 1 on verification failure, 2 on input
/// errors.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace iqh
