#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

namespace orbitdual::cli {

/// Checker knobs. Precedence: flags > ORBITDUAL_* environment > --config file > defaults.
struct RunConfig {
    unsigned jobs = 1;
    std::uint64_t max_points = 1'000'000'000ULL;
};

struct ConfigSources {
    std::optional<unsigned> flag_jobs;
    std::optional<std::uint64_t> flag_max_points;
    std::optional<std::string> config_path;
    /// Environment lookup; defaults to std::getenv. Injectable for tests.
    std::function<std::optional<std::string>(const char*)> getenv;
};

/// Throws DomainError(RangeViolation) on malformed values or an unreadable file.
RunConfig resolve_config(const ConfigSources& sources);

} // namespace orbitdual::cli
