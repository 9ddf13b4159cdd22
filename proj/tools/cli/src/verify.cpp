#include "orbitdual/cli/verify.hpp"

#include "orbitdual/checker.hpp"
#include "orbitdual/cli/corpus.hpp"
#include "orbitdual/duality.hpp"
#include "orbitdual/error.hpp"
#include "orbitdual/induction.hpp"
#include "orbitdual/infchar.hpp"
#include "orbitdual/levi.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

namespace orbitdual::cli {
namespace {

using Clock = std::chrono::steady_clock;

class Suite {
public:
    Suite(const VerifyOptions& o) : options_(o) {}

    /// Records expected vs the string produced by `compute`; a thrown error counts as a mismatch.
    void check(const std::string& group, const std::string& name, std::string expected,
               const std::function<std::string()>& compute)
    {
        if (options_.inject_fault && !fault_used_) {
            expected = "<corrupted> " + expected;
            fault_used_ = true;
        }
        VerifyRow row{group, name, std::move(expected), {}, false, 0.0};
        const auto start = Clock::now();
        try {
            row.actual = compute();
        } catch (const std::exception& e) {
            row.actual = std::string("error: ") + e.what();
        }
        row.seconds = std::chrono::duration<double>(Clock::now() - start).count();
        row.ok = row.actual == row.expected;
        rows_.push_back(std::move(row));
    }

    void corpus(const std::string& group, const std::string& name, const std::vector<Instance>& instances)
    {
        check(group, name, std::to_string(instances.size()) + "/" + std::to_string(instances.size()) + " Pass", [&] {
            CheckOptions co;
            co.jobs = options_.jobs;
            std::size_t pass = 0;
            std::string first_failure;
            for (const auto& inst : instances) {
                const auto r = mild_check_classical(inst.lambda, inst.type, inst.lattice, co);
                if (r.verdict == Verdict::Pass)
                    ++pass;
                else if (first_failure.empty())
                    first_failure = " (first failure: " + inst.label + ")";
            }
            return std::to_string(pass) + "/" + std::to_string(instances.size()) + " Pass" + first_failure;
        });
    }

    std::vector<VerifyRow> take() { return std::move(rows_); }

private:
    const VerifyOptions& options_;
    bool fault_used_ = false;
    std::vector<VerifyRow> rows_;
};

std::string str(const Partition& d) { return d.to_string(); }
std::string str(const RationalVector& v) { return to_string(v); }

std::string tuple_str(const OrbitTuple& t)
{
    std::string s = "(";
    for (std::size_t i = 0; i < t.entries.size(); ++i) {
        if (i) s += ", ";
        s += t.entries[i].first.label + ":" + t.entries[i].second.to_string();
    }
    return s + ")";
}

void counterexample1(Suite& s)
{
    const std::string g = "counterexample1";
    const LieType d10{Family::D, 10};
    const RationalVector l1 = parse_rational_list("9/2,7/2,5/2,3/2,1/2,2,1,2,1,0");
    const RationalVector l2 = parse_rational_list("5/2,3/2,1/2,3/2,1/2,4,3,2,1,0");
    s.check(g, "f_DC([9,1])", "[10]", [] { return str(f_DC({9, 1})); });
    s.check(g, "f_DC([5,5])", "[6,4]", [] { return str(f_DC({5, 5})); });
    s.check(g, "[9,1] and [5,5] are D-special", "true true",
            [] { return std::string(is_special_class({9, 1}, 0, 0) ? "true" : "false") + " " +
                        (is_special_class({5, 5}, 0, 0) ? "true" : "false"); });
    s.check(g, "[10] and [6,4] are metaplectic special", "true true",
            [] { return std::string(is_special_class({10}, 1, 1) ? "true" : "false") + " " +
                        (is_special_class({6, 4}, 1, 1) ? "true" : "false"); });
    s.check(g, "rho+([10,5,5])", str(l1), [] { return str(rho_plus({10, 5, 5}, 20)); });
    s.check(g, "rho+([6,4,9,1])", str(l2), [] { return str(rho_plus({6, 4, 9, 1}, 20)); });
    s.check(g, "|lambda1|^2 > |lambda2|^2", "205/4 > 165/4",
            [&] { return dot(l1, l1).to_string() + (dot(l1, l1) > dot(l2, l2) ? " > " : " <= ") + dot(l2, l2).to_string(); });
    s.check(g, "integral pseudo-Levi of lambda1", "so(10)+so(10)", [&] {
        std::string out;
        for (const auto& f : integral_pseudo_levi(l1, d10)) out += (out.empty() ? "" : "+") + f.name();
        return out;
    });
    const auto factors = integral_pseudo_levi(l1, d10);
    s.check(g, "induced orbits of lambda1", "(integer:[5,5], half-integer:[9,1])",
            [&] { return tuple_str(induced_tuple(l1, factors)); });
    s.check(g, "induced orbits of lambda2", "(integer:[9,1], half-integer:[5,5])",
            [&] { return tuple_str(induced_tuple(l2, factors)); });
    s.check(g, "induced orbits are incomparable", "incomparable", [&] {
        const auto a = induced_tuple(l1, factors);
        const auto b = induced_tuple(l2, factors);
        return std::string(orbit_tuple_leq(a, b) || orbit_tuple_leq(b, a) ? "comparable" : "incomparable");
    });
    s.check(g, "lambda1 against the root lattice of D10", "Pass", [&] {
        return std::string(to_string(mild_check_classical(l1, d10, lattice_preset(d10, "root")).verdict));
    });
}

void root_vs_weight(Suite& s)
{
    const std::string g = "root_vs_weight";
    const LieType d3{Family::D, 3};
    const RationalVector lambda = parse_rational_list("5/2,3/2,1/2");
    s.check(g, "(5/2,3/2,1/2) in D3, weight lattice", "Fail witness (2,1,0)", [&] {
        const auto r = mild_check_classical(lambda, d3, lattice_preset(d3, "weight"));
        std::string out(to_string(r.verdict));
        if (!r.witnesses.empty()) out += " witness " + to_string(r.witnesses.front().nu);
        return out;
    });
    s.check(g, "(5/2,3/2,1/2) in D3, root lattice", "Pass", [&] {
        return std::string(to_string(mild_check_classical(lambda, d3, lattice_preset(d3, "root")).verdict));
    });
    s.check(g, "Ind from the Cartan of so(6)", "[5,1]", [] { return str(induce_staged(Family::D, {1, 1, 1}, 0)); });
    s.check(g, "Ind from the Cartan of so(7)", "[7]", [] { return str(induce_staged(Family::B, {1, 1, 1}, 0)); });
    s.check(g, "Ind from so(3) x gl(1)^2 in so(7)", "[5,1,1]", [] { return str(induce_staged(Family::B, {1, 1}, 1)); });
}

} // namespace

const std::vector<std::string>& verify_groups()
{
    static const std::vector<std::string> groups{"counterexample1", "root_vs_weight", "q-unipotent",
                                                 "metaplectic",     "type-a",         "antisymmetric"};
    return groups;
}

std::vector<VerifyRow> run_verify(const VerifyOptions& options)
{
    const auto& groups = verify_groups();
    if (!options.filter.empty() && std::find(groups.begin(), groups.end(), options.filter) == groups.end())
        throw DomainError(ErrorKind::RangeViolation, "unknown verify group '" + options.filter + "'");
    auto wanted = [&](const std::string& g) { return options.filter.empty() || options.filter == g; };

    Suite s(options);
    if (wanted("counterexample1")) counterexample1(s);
    if (wanted("root_vs_weight")) root_vs_weight(s);
    if (wanted("q-unipotent")) s.corpus("q-unipotent", "q-unipotent characters, N' in 5..9, rank <= 4", q_unipotent_corpus());
    if (wanted("metaplectic")) s.corpus("metaplectic", "metaplectic characters, sp(2n) with n <= 4", metaplectic_corpus());
    if (wanted("type-a")) s.corpus("type-a", "xi characters in gl(n), n <= 6", type_a_corpus());
    if (wanted("antisymmetric")) s.corpus("antisymmetric", "antisymmetric rho_s characters, rank <= 4", antisymmetric_corpus());
    return s.take();
}

std::string format_table(const std::vector<VerifyRow>& rows)
{
    std::size_t wg = 5;
    std::size_t wc = 5;
    std::size_t we = 8;
    std::size_t wa = 6;
    for (const auto& r : rows) {
        wg = std::max(wg, r.group.size());
        wc = std::max(wc, r.check.size());
        we = std::max(we, r.expected.size());
        wa = std::max(wa, r.actual.size());
    }
    auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - std::min(w, s.size()), ' '); };
    std::ostringstream out;
    out << pad("group", wg) << "  " << pad("check", wc) << "  " << pad("expected", we) << "  " << pad("actual", wa) << "  status\n";
    std::size_t failures = 0;
    for (const auto& r : rows) {
        out << pad(r.group, wg) << "  " << pad(r.check, wc) << "  " << pad(r.expected, we) << "  " << pad(r.actual, wa) << "  "
            << (r.ok ? "ok" : "MISMATCH") << "\n";
        failures += r.ok ? 0 : 1;
    }
    out << rows.size() << " checks, " << failures << " mismatches\n";
    return out.str();
}

} // namespace orbitdual::cli
