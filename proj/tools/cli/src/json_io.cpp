#include "orbitdual/cli/json_io.hpp"

#include "orbitdual/error.hpp"

namespace orbitdual::cli {

Json envelope(std::string_view command)
{
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    return j;
}

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const RationalVector& v)
{
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

Json to_json(const Partition& d) { return d.parts(); }

Json to_json(const Lattice& l)
{
    Json j;
    j["name"] = l.name;
    Json rows = Json::array();
    for (const auto& row : l.basis) rows.push_back(to_json(row));
    j["basis"] = std::move(rows);
    return j;
}

Json to_json(const Factor& f)
{
    Json j;
    j["name"] = f.name();
    j["label"] = f.label;
    j["family"] = std::string(1, family_letter(f.family));
    j["indices"] = f.indices;
    j["signs"] = f.signs;
    return j;
}

Json to_json(const LeviDecomposition& l)
{
    Json j;
    j["name"] = l.name();
    Json blocks = Json::array();
    for (const auto& b : l.blocks) {
        Json bj;
        bj["size"] = b.size();
        bj["value"] = to_json(b.value);
        bj["indices"] = b.indices;
        bj["signs"] = b.signs;
        blocks.push_back(std::move(bj));
    }
    j["gl_blocks"] = std::move(blocks);
    j["residual"] = l.residual;
    return j;
}

Json to_json(const OrbitTuple& t)
{
    Json a = Json::array();
    for (const auto& [factor, d] : t.entries) {
        Json e;
        e["factor"] = factor.name();
        e["label"] = factor.label;
        e["partition"] = to_json(d);
        a.push_back(std::move(e));
    }
    return a;
}

Json to_json(const CheckReport& r)
{
    Json j;
    j["verdict"] = std::string(to_string(r.verdict));
    j["mode"] = r.mode;
    j["type"] = r.type.name();
    j["lattice"] = to_json(r.lattice);
    j["lambda"] = to_json(r.lambda);
    j["norm_sq_lambda"] = to_json(r.norm_sq_lambda);
    j["points_scanned"] = r.points_scanned;
    j["candidates"] = r.candidates;
    j["canonicalized"] = r.canonicalized;
    if (r.type.classical()) {
        Json factors = Json::array();
        for (const auto& f : r.factors) factors.push_back(to_json(f));
        j["factors"] = std::move(factors);
        j["lambda_orbits"] = to_json(r.lambda_orbits);
    }
    if (r.n_lambda >= 0) j["n_lambda"] = r.n_lambda;
    j["form_normalization"] = r.form_normalization;
    Json w = Json::array();
    for (const auto& x : r.witnesses) {
        Json wj;
        wj["nu"] = to_json(x.nu);
        wj["norm_sq"] = to_json(x.norm_sq);
        wj["reason"] = x.reason;
        w.push_back(std::move(wj));
    }
    j["witnesses"] = std::move(w);
    j["wall_time"] = r.wall_time;
    return j;
}

Json to_json(const NormComparisonReport& r)
{
    Json j;
    j["ok"] = r.ok;
    j["vectors"] = r.vectors;
    j["comparisons"] = r.comparisons;
    j["equality_cases"] = r.equality_cases;
    j["violations"] = r.violations;
    return j;
}

Rational rational_from_json(const Json& j)
{
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    throw DomainError(ErrorKind::InvalidLattice, "lattice entries must be strings \"p/q\" or integers");
}

Lattice lattice_from_json(const Json& j, std::string default_name)
{
    if (!j.is_object() || !j.contains("basis") || !j["basis"].is_array())
        throw DomainError(ErrorKind::InvalidLattice, "lattice file needs a \"basis\" array");
    RationalMatrix basis;
    for (const auto& row : j["basis"]) {
        if (!row.is_array()) throw DomainError(ErrorKind::InvalidLattice, "lattice basis rows must be arrays");
        RationalVector v;
        for (const auto& x : row) v.push_back(rational_from_json(x));
        basis.push_back(std::move(v));
    }
    std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : std::move(default_name);
    return make_lattice(std::move(name), std::move(basis));
}

} // namespace orbitdual::cli
