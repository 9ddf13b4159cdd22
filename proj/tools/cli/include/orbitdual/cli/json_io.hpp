#pragma once

#include "orbitdual/checker.hpp"
#include "orbitdual/lattice.hpp"
#include "orbitdual/levi.hpp"
#include "orbitdual/partition.hpp"
#include "orbitdual/rational.hpp"

#include <json.hpp>

#include <string_view>

namespace orbitdual::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// {"schema_version": 1, "command": name}; every document starts this way.
Json envelope(std::string_view command);

/// Rationals travel as "p/q" strings so no precision is lost.
Json to_json(const Rational& r);
Json to_json(const RationalVector& v);
Json to_json(const Partition& d);
Json to_json(const Lattice& l);
Json to_json(const Factor& f);
Json to_json(const LeviDecomposition& l);
Json to_json(const OrbitTuple& t);
Json to_json(const CheckReport& r);
Json to_json(const NormComparisonReport& r);

Rational rational_from_json(const Json& j);
/// {"basis": [[...], ...], "name": optional}. Entries are strings or integers.
Lattice lattice_from_json(const Json& j, std::string default_name);

} // namespace orbitdual::cli
