#include "orbitdual/cli/app.hpp"

#include "orbitdual/checker.hpp"
#include "orbitdual/cli/config.hpp"
#include "orbitdual/cli/json_io.hpp"
#include "orbitdual/cli/verify.hpp"
#include "orbitdual/duality.hpp"
#include "orbitdual/enumerate.hpp"
#include "orbitdual/error.hpp"
#include "orbitdual/induction.hpp"
#include "orbitdual/infchar.hpp"
#include "orbitdual/levi.hpp"
#include "orbitdual/linalg.hpp"
#include "orbitdual/partition_oracle.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

namespace orbitdual::cli {
namespace {

std::vector<int> parse_rows(const std::string& text)
{
    std::vector<int> rows;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok.erase(0, tok.find_first_not_of(' '));
        tok.erase(tok.find_last_not_of(' ') + 1);
        int v = 0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size() || v <= 0)
            throw DomainError(ErrorKind::InvalidPartition, "bad row '" + tok + "'");
        rows.push_back(v);
    }
    return rows;
}

Family parse_orbit_family(const std::string& text)
{
    const Family f = parse_family(text);
    if (!is_classical(f)) throw DomainError(ErrorKind::NonClassicalType, "family must be one of A, B, C, D");
    return f;
}

Lattice resolve_lattice(const std::string& spec, const LieType& type)
{
    if (!spec.empty() && spec.front() == '@') {
        const std::string path = spec.substr(1);
        std::ifstream in(path);
        if (!in) throw DomainError(ErrorKind::InvalidLattice, "cannot read lattice file " + path);
        Json j;
        try {
            j = Json::parse(in);
        } catch (const Json::exception& e) {
            throw DomainError(ErrorKind::InvalidLattice, std::string("lattice file is not JSON: ") + e.what());
        }
        return lattice_from_json(j, "file");
    }
    return lattice_preset(type, spec);
}

RationalVector resolve_vector(const std::string& text, const LieType& type, const std::string& coords)
{
    RationalVector v = parse_rational_list(text);
    if (coords == "weight") return from_weight_coordinates(v, build_root_system(type));
    if (coords != "ambient") throw DomainError(ErrorKind::RangeViolation, "--coords must be ambient or weight");
    return v;
}

struct CheckRequest {
    std::string type;
    std::string vector;
    std::string lattice = "root";
    std::string mode;
    std::string coords = "ambient";
};

CheckReport run_check(const CheckRequest& req, const CheckOptions& options)
{
    const LieType type = LieType::parse(req.type);
    const RationalVector lambda = resolve_vector(req.vector, type, req.coords);
    const Lattice lattice = resolve_lattice(req.lattice, type);
    const std::string mode = req.mode.empty() ? (type.classical() ? "classical" : "exceptional") : req.mode;
    if (mode == "classical") return mild_check_classical(lambda, type, lattice, options);
    if (mode == "exceptional") return mild_check_exceptional(lambda, type, lattice, options);
    if (mode == "oracle") return brute_force_mild_oracle(lambda, type, lattice);
    throw DomainError(ErrorKind::RangeViolation, "--mode must be classical, exceptional or oracle");
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

void write_csv(std::ostream& out, const std::vector<CheckReport>& reports)
{
    out << "type,lattice,lambda,verdict,mode,norm_sq_lambda,points_scanned,candidates,first_witness\n";
    for (const auto& r : reports) {
        out << r.type.name() << ',' << csv_field(r.lattice.name) << ',' << csv_field(to_string(r.lambda)) << ','
            << to_string(r.verdict) << ',' << r.mode << ',' << r.norm_sq_lambda << ',' << r.points_scanned << ','
            << r.candidates << ',' << csv_field(r.witnesses.empty() ? "" : to_string(r.witnesses.front().nu)) << '\n';
    }
}

std::vector<CheckRequest> read_batch(const std::string& path, const CheckRequest& defaults)
{
    std::ifstream in(path);
    if (!in) throw DomainError(ErrorKind::RangeViolation, "cannot read batch file " + path);
    std::vector<CheckRequest> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first) || first.front() == '#') continue;
        CheckRequest req = defaults;
        req.type = first;
        if (!(ls >> req.vector))
            throw DomainError(ErrorKind::RangeViolation, "batch line " + std::to_string(lineno) + " needs a type and a vector");
        std::string lattice;
        if (ls >> lattice) req.lattice = lattice;
        out.push_back(std::move(req));
    }
    return out;
}

void merge_into(Json& doc, const Json& extra)
{
    for (const auto& [k, v] : extra.items()) doc[k] = v;
}

Json infchar_doc(const std::string& construction, const std::string& partition_text, const std::vector<std::string>& r_text,
                 const std::string& s_text, const std::string& variant, const std::string& type_text)
{
    const std::vector<int> rows = parse_rows(partition_text);
    Json doc = envelope("infchar");
    doc["construction"] = construction;
    doc["partition"] = rows;
    RationalVector vec;
    RationalVector multiset;
    RationalVector dominant;
    std::optional<LieType> type;
    if (!type_text.empty()) type = LieType::parse(type_text);
    if (type) doc["type"] = type->name();

    auto symmetric_dominant = [&](const RationalVector& v) {
        if (type && type->family != Family::A && type->classical()) return cartan_half(v);
        return sorted_desc(v);
    };

    if (construction == "rho-plus") {
        int n = 0;
        for (int q : rows) n += q;
        vec = rho_plus(rows, n);
        multiset = sorted_desc(vec);
        dominant = multiset;
    } else if (construction == "xi") {
        if (r_text.empty()) throw DomainError(ErrorKind::RangeViolation, "xi needs --r");
        RationalVector r;
        for (const auto& t : r_text) {
            const auto part = parse_rational_list(t);
            r.insert(r.end(), part.begin(), part.end());
        }
        if (r.size() == 1) {
            const Partition q = Partition::from_unsorted(rows);
            vec = xi_r(q, r.front());
            Json mins = Json::array();
            for (const auto& m : xi_minimizers(q, r.front())) mins.push_back(to_json(m));
            doc["minimizers"] = std::move(mins);
        } else {
            vec = xi_rvec(rows, r);
        }
        doc["r"] = to_json(r);
        multiset = sorted_desc(vec);
        dominant = multiset;
    } else if (construction == "rho-s") {
        const RationalVector s = parse_rational_list(s_text);
        vec = rho_s(rows, s);
        doc["s"] = to_json(s);
        doc["antisymmetric"] = is_antisymmetric(rows, s);
        multiset = sorted_desc(vec);
        dominant = symmetric_dominant(vec);
    } else if (construction == "q-unipotent") {
        if (!type) throw DomainError(ErrorKind::InvalidType, "q-unipotent needs --type");
        const Partition q = Partition::from_unsorted(rows);
        vec = q_unipotent_infchar(q, *type, parse_variant(variant.empty() ? "default" : variant));
        multiset = half_h(q);
        dominant = vec;
    } else if (construction == "metaplectic") {
        const Partition q = Partition::from_unsorted(rows);
        vec = metaplectic_infchar(q);
        multiset = half_h(q);
        dominant = vec;
    } else {
        throw DomainError(ErrorKind::RangeViolation, "unknown construction '" + construction + "'");
    }
    doc["vector"] = to_json(vec);
    doc["multiset"] = to_json(multiset);
    doc["dominant"] = to_json(dominant);
    return doc;
}

Json levi_doc(const std::string& type_text, const std::string& vector_text)
{
    const LieType type = LieType::parse(type_text);
    const RationalVector v = parse_rational_list(vector_text);
    const auto factors = integral_pseudo_levi(v, type);
    Json doc = envelope("levi");
    doc["type"] = type.name();
    doc["vector"] = to_json(v);
    Json fs = Json::array();
    for (const auto& f : factors) {
        const LeviDecomposition l = centralizer_levi(v, f);
        Json fj = to_json(f);
        fj["centralizer"] = to_json(l);
        fj["induced_orbit"] = to_json(induce_zero_factor(l));
        fs.push_back(std::move(fj));
    }
    doc["factors"] = std::move(fs);
    return doc;
}

Json induce_doc(const std::string& ambient_text, const std::string& levi_text)
{
    const LieType ambient = LieType::parse(ambient_text);
    const LeviShape shape = parse_levi_shape(levi_text);
    const int z = residual_coordinates(shape, ambient);
    const Partition d = induce_staged(ambient.family, shape.gl_blocks, z);
    Json doc = envelope("induce");
    doc["ambient"] = ambient.name();
    doc["levi"] = levi_text;
    doc["partition"] = to_json(d);
    doc["dimension"] = orbit_dimension(d, ambient.family);
    return doc;
}

Json enumerate_doc(const std::string& type_text, const std::string& shift_text, const std::string& lattice_spec,
                   const std::string& radius_text, bool strict, std::uint64_t limit)
{
    const LieType type = LieType::parse(type_text);
    const RootSystem rs = build_root_system(type);
    const Lattice lattice = resolve_lattice(lattice_spec, type);
    const RationalVector shift = shift_text.empty() ? RationalVector(rs.dim()) : parse_rational_list(shift_text);
    const Rational radius = Rational::parse(radius_text);
    const CosetBall ball(shift, lattice, rs.form, radius, strict);
    Json points = Json::array();
    std::uint64_t count = 0;
    const bool complete = ball.for_each([&](std::span<const std::int64_t> c, const Rational& norm) {
        if (count == limit) return false;
        ++count;
        Json p;
        p["point"] = to_json(ball.point(c));
        p["coefficients"] = std::vector<std::int64_t>(c.begin(), c.end());
        p["norm_sq"] = to_json(norm);
        points.push_back(std::move(p));
        return true;
    });
    Json doc = envelope("enumerate");
    doc["type"] = type.name();
    doc["lattice"] = to_json(lattice);
    doc["shift"] = to_json(shift);
    doc["radius_sq"] = to_json(radius);
    doc["strict"] = strict;
    doc["count"] = count;
    doc["truncated"] = !complete;
    doc["points"] = std::move(points);
    return doc;
}

Json error_doc(std::string_view kind, const std::string& message)
{
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["error"] = {{"kind", kind}, {"message", message}};
    return doc;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const EnvLookup& env)
{
    CLI::App app{"Exact duality maps, infinitesimal characters and mild-unipotence checks", "orbitdual"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");

    std::string type_text;
    std::string partition_text;
    bool with_oracle = false;
    auto* collapse_cmd = app.add_subcommand("collapse", "X-collapse of a partition");
    collapse_cmd->add_option("--type", type_text, "B, C or D")->required();
    collapse_cmd->add_option("--partition", partition_text, "descending parts a,b,c")->required();
    collapse_cmd->add_flag("--oracle", with_oracle, "also run the brute-force oracle");

    std::string map_text;
    bool unchecked = false;
    auto* dual_cmd = app.add_subcommand("dual", "duality maps f-bc, f-cb, f-dc, f-cd, ls, bv");
    dual_cmd->add_option("--map", map_text)->required();
    dual_cmd->add_option("--type", type_text, "orbit family A, B, C or D (needed for ls and bv)");
    dual_cmd->add_option("--partition", partition_text)->required();
    dual_cmd->add_flag("--unchecked", unchecked, "skip the domain check");

    std::string construction;
    std::vector<std::string> r_text;
    std::string s_text;
    std::string variant;
    auto* infchar_cmd = app.add_subcommand("infchar", "unipotent infinitesimal characters");
    infchar_cmd->add_option("--construction", construction, "rho-plus, xi, rho-s, q-unipotent, metaplectic")->required();
    infchar_cmd->add_option("--partition", partition_text, "rows q_1,...,q_k")->required();
    infchar_cmd->add_option("--r", r_text, "one r or one r per row")->allow_extra_args(false);
    infchar_cmd->add_option("--s", s_text, "one shift per row");
    infchar_cmd->add_option("--variant", variant, "default or outer");
    infchar_cmd->add_option("--type", type_text);

    std::string vector_text;
    auto* levi_cmd = app.add_subcommand("levi", "integral pseudo-Levi, centralizers and induced orbits");
    levi_cmd->add_option("--type", type_text)->required();
    levi_cmd->add_option("--vector", vector_text)->required();

    std::string ambient_text;
    std::string levi_text;
    auto* induce_cmd = app.add_subcommand("induce", "Richardson orbit induced from a Levi");
    induce_cmd->add_option("--ambient", ambient_text)->required();
    induce_cmd->add_option("--levi", levi_text, "e.g. gl2,gl2,res2")->required();

    CheckRequest req;
    unsigned flag_jobs = 0;
    std::uint64_t flag_max_points = 0;
    std::string config_path;
    bool no_canonicalize = false;
    std::string format;
    std::string batch_path;
    auto* check_cmd = app.add_subcommand("check-mild", "mild-unipotence check");
    check_cmd->add_option("--type", req.type);
    check_cmd->add_option("--vector", req.vector);
    check_cmd->add_option("--lattice", req.lattice, "root, integer, weight or @file.json")->capture_default_str();
    check_cmd->add_option("--mode", req.mode, "classical, exceptional or oracle");
    check_cmd->add_option("--coords", req.coords, "ambient or weight")->capture_default_str();
    auto* jobs_opt = check_cmd->add_option("--jobs", flag_jobs);
    auto* max_opt = check_cmd->add_option("--max-points", flag_max_points);
    auto* config_opt = check_cmd->add_option("--config", config_path, "JSON file with jobs and max_points");
    check_cmd->add_flag("--no-canonicalize", no_canonicalize);
    check_cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    check_cmd->add_option("--batch", batch_path, "file with lines: type vector [lattice]");

    std::string filter;
    bool inject_fault = false;
    std::string verify_format = "table";
    unsigned verify_jobs = 0;
    std::string verify_config;
    auto* verify_cmd = app.add_subcommand("verify-paper", "golden suite of worked examples and desk corpora");
    verify_cmd->add_option("--filter", filter, "run one group only");
    verify_cmd->add_flag("--inject-fault", inject_fault, "corrupt one stored expectation");
    verify_cmd->add_option("--format", verify_format)->check(CLI::IsMember({"table", "json"}));
    auto* verify_jobs_opt = verify_cmd->add_option("--jobs", verify_jobs);
    auto* verify_config_opt = verify_cmd->add_option("--config", verify_config);

    std::string shift_text;
    std::string lattice_spec = "root";
    std::string radius_text;
    bool strict = false;
    std::uint64_t limit = 10000;
    auto* enum_cmd = app.add_subcommand("enumerate", "points of a lattice coset inside a ball");
    enum_cmd->add_option("--type", type_text)->required();
    enum_cmd->add_option("--shift", shift_text);
    enum_cmd->add_option("--lattice", lattice_spec)->capture_default_str();
    enum_cmd->add_option("--radius-sq", radius_text)->required();
    enum_cmd->add_flag("--strict", strict);
    enum_cmd->add_option("--limit", limit)->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        if (check_cmd->parsed() && batch_path.empty() && (req.type.empty() || req.vector.empty()))
            throw CLI::RequiredError("check-mild needs --type and --vector, or --batch");
    } catch (const CLI::CallForHelp&) {
        const CLI::App* target = &app;
        for (const auto* sub : app.get_subcommands()) target = sub;
        out << target->help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        Json doc;
        if (collapse_cmd->parsed()) {
            const Family x = parse_orbit_family(type_text);
            const Partition d = Partition::parse(partition_text);
            const Partition c = collapse(d, x);
            doc = envelope("collapse");
            doc["input"] = to_json(d);
            doc["type"] = std::string(1, family_letter(x));
            doc["output"] = to_json(c);
            if (with_oracle) doc["oracle_agrees"] = brute_collapse_oracle(d, x) == c;
        } else if (dual_cmd->parsed()) {
            const DualityMap m = parse_duality_map(map_text);
            const Partition d = Partition::parse(partition_text);
            Partition image;
            switch (m) {
            case DualityMap::FBC: image = f_BC(d, !unchecked); break;
            case DualityMap::FCB: image = f_CB(d, !unchecked); break;
            case DualityMap::FDC: image = f_DC(d, !unchecked); break;
            case DualityMap::FCD: image = f_CD(d, !unchecked); break;
            case DualityMap::LS:
            case DualityMap::BV: {
                if (type_text.empty()) throw DomainError(ErrorKind::InvalidType, "ls and bv need --type");
                const Family x = parse_orbit_family(type_text);
                image = m == DualityMap::LS ? d_LS(d, x, !unchecked) : d_BV(d, x, !unchecked);
                break;
            }
            }
            doc = envelope("dual");
            doc["input"] = to_json(d);
            doc["map"] = std::string(to_string(m));
            if (!type_text.empty()) doc["type"] = type_text;
            doc["output"] = to_json(image);
        } else if (infchar_cmd->parsed()) {
            doc = infchar_doc(construction, partition_text, r_text, s_text, variant, type_text);
        } else if (levi_cmd->parsed()) {
            doc = levi_doc(type_text, vector_text);
        } else if (induce_cmd->parsed()) {
            doc = induce_doc(ambient_text, levi_text);
        } else if (check_cmd->parsed()) {
            ConfigSources src;
            if (jobs_opt->count()) src.flag_jobs = flag_jobs;
            if (max_opt->count()) src.flag_max_points = flag_max_points;
            if (config_opt->count()) src.config_path = config_path;
            src.getenv = env;
            const RunConfig cfg = resolve_config(src);
            CheckOptions options;
            options.jobs = cfg.jobs;
            options.max_points = cfg.max_points;
            options.canonicalize = !no_canonicalize;

            std::vector<CheckReport> reports;
            if (!batch_path.empty()) {
                for (const auto& r : read_batch(batch_path, req)) reports.push_back(run_check(r, options));
            } else {
                reports.push_back(run_check(req, options));
            }
            if (format == "csv") {
                write_csv(out, reports);
                return kExitOk;
            }
            doc = envelope("check-mild");
            if (batch_path.empty()) {
                merge_into(doc, to_json(reports.front()));
            } else {
                Json arr = Json::array();
                for (const auto& r : reports) arr.push_back(to_json(r));
                doc["reports"] = std::move(arr);
            }
        } else if (verify_cmd->parsed()) {
            ConfigSources src;
            if (verify_jobs_opt->count()) src.flag_jobs = verify_jobs;
            if (verify_config_opt->count()) src.config_path = verify_config;
            src.getenv = env;
            const RunConfig cfg = resolve_config(src);
            const auto rows = run_verify({filter, inject_fault, cfg.jobs});
            const bool all_ok = std::all_of(rows.begin(), rows.end(), [](const VerifyRow& r) { return r.ok; });
            if (verify_format == "table") {
                out << format_table(rows);
            } else {
                doc = envelope("verify-paper");
                Json arr = Json::array();
                for (const auto& r : rows)
                    arr.push_back({{"group", r.group}, {"check", r.check}, {"expected", r.expected},
                                   {"actual", r.actual}, {"ok", r.ok}, {"wall_time", r.seconds}});
                doc["rows"] = std::move(arr);
                doc["ok"] = all_ok;
                out << doc.dump(2) << '\n';
            }
            return all_ok ? kExitOk : kExitMismatch;
        } else if (enum_cmd->parsed()) {
            doc = enumerate_doc(type_text, shift_text, lattice_spec, radius_text, strict, limit);
        }
        out << doc.dump(2) << '\n';
        return kExitOk;
    } catch (const DomainError& e) {
        out << error_doc(to_string(e.kind()), e.what()).dump(2) << '\n';
        return kExitDomain;
    } catch (const std::overflow_error& e) {
        out << error_doc("ArithmeticOverflow", e.what()).dump(2) << '\n';
        return kExitDomain;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}

} // namespace orbitdual::cli
