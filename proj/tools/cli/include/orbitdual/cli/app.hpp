#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace orbitdual::cli {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitMismatch = 3; // verify-paper found a mismatch
inline constexpr int kExitUsage = 64;

using EnvLookup = std::function<std::optional<std::string>(const char*)>;

/// Runs one command. `args` excludes the program name. Successful commands
/// write exactly one JSON document to `out` (verify-paper's table format and
/// check-mild's CSV format are the exceptions); domain errors write an error
/// document to `out`; usage errors write to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const EnvLookup& env = {});

} // namespace orbitdual::cli
