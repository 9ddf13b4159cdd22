#include "orbitdual/cli/config.hpp"

#include "orbitdual/cli/json_io.hpp"
#include "orbitdual/error.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>

namespace orbitdual::cli {
namespace {

std::uint64_t parse_count(const std::string& text, const char* what)
{
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
        throw DomainError(ErrorKind::RangeViolation, std::string(what) + " must be a nonnegative integer, got '" + text + "'");
    return v;
}

unsigned checked_jobs(std::uint64_t v)
{
    if (v == 0 || v > 1024) throw DomainError(ErrorKind::RangeViolation, "jobs must be between 1 and 1024");
    return static_cast<unsigned>(v);
}

} // namespace

RunConfig resolve_config(const ConfigSources& sources)
{
    RunConfig cfg;
    if (sources.config_path) {
        std::ifstream in(*sources.config_path);
        if (!in) throw DomainError(ErrorKind::RangeViolation, "cannot read config file " + *sources.config_path);
        try {
            const Json j = Json::parse(in);
            if (j.contains("jobs")) cfg.jobs = checked_jobs(j.at("jobs").get<std::uint64_t>());
            if (j.contains("max_points")) cfg.max_points = j.at("max_points").get<std::uint64_t>();
        } catch (const Json::exception& e) {
            throw DomainError(ErrorKind::RangeViolation, std::string("bad config file: ") + e.what());
        }
    }
    auto env = sources.getenv ? sources.getenv : [](const char* name) -> std::optional<std::string> {
        const char* v = std::getenv(name);
        return v ? std::optional<std::string>(v) : std::nullopt;
    };
    if (auto v = env("ORBITDUAL_JOBS")) cfg.jobs = checked_jobs(parse_count(*v, "ORBITDUAL_JOBS"));
    if (auto v = env("ORBITDUAL_MAX_POINTS")) cfg.max_points = parse_count(*v, "ORBITDUAL_MAX_POINTS");
    if (sources.flag_jobs) cfg.jobs = checked_jobs(*sources.flag_jobs);
    if (sources.flag_max_points) cfg.max_points = *sources.flag_max_points;
    return cfg;
}

} // namespace orbitdual::cli
