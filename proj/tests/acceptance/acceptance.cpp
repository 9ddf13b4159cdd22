// One PASS/FAIL line per acceptance criterion. Time limits are pinned below;
// a criterion that finishes correctly but over its limit still fails.

#include "corpus.hpp"
#include "oracles.hpp"
#include "orbitdual/checker.hpp"
#include "orbitdual/cli/corpus.hpp"
#include "orbitdual/duality.hpp"
#include "orbitdual/error.hpp"
#include "orbitdual/induction.hpp"
#include "orbitdual/infchar.hpp"
#include "orbitdual/levi.hpp"
#include "orbitdual/partition_oracle.hpp"
#include "orbitdual/root_system.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

using namespace orbitdual;

namespace {

constexpr double kGoldenLimitSec = 1.0;
constexpr double kCorpusLimitSec = 600.0;
constexpr double kPropertyLimitSec = 600.0;
constexpr double kExceptionalLimitSec = 60.0;
constexpr std::uint64_t kE8PointCap = 50'000'000;

/// Collects failed expectations; a criterion passes iff none were recorded.
class Outcome {
public:
    void expect(bool ok, const std::string& what)
    {
        ++checks_;
        if (!ok) failures_.push_back(what);
    }
    template <class T>
    void expect_eq(const T& actual, const T& expected, const std::string& what)
    {
        std::ostringstream msg;
        msg << what << ": got " << show(actual) << ", expected " << show(expected);
        expect(actual == expected, msg.str());
    }
    void time_limit(double seconds, double limit, const std::string& what)
    {
        std::ostringstream msg;
        msg << what << " took " << std::fixed << std::setprecision(2) << seconds << " s, limit " << limit << " s";
        expect(seconds < limit, msg.str());
    }
    /// Informational line shown with --verbose.
    void note(const std::string& text) { notes_.push_back(text); }
    [[nodiscard]] const std::vector<std::string>& notes() const { return notes_; }
    [[nodiscard]] bool ok() const { return failures_.empty(); }
    [[nodiscard]] std::size_t checks() const { return checks_; }
    [[nodiscard]] const std::vector<std::string>& failures() const { return failures_; }

private:
    static std::string show(const Partition& d) { return d.to_string(); }
    static std::string show(const RationalVector& v) { return to_string(v); }
    static std::string show(const Rational& r) { return r.to_string(); }
    static std::string show(const std::string& s) { return s; }
    static std::string show(Verdict v) { return std::string(to_string(v)); }
    static std::string show(std::size_t n) { return std::to_string(n); }

    std::size_t checks_ = 0;
    std::vector<std::string> failures_;
    std::vector<std::string> notes_;
};

double seconds_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

template <class Fn>
double timed(Fn&& fn)
{
    const auto start = std::chrono::steady_clock::now();
    fn();
    return seconds_since(start);
}

std::string tuple_partitions(const OrbitTuple& t)
{
    std::string s = "(";
    for (std::size_t i = 0; i < t.entries.size(); ++i) s += (i ? "," : "") + t.entries[i].second.to_string();
    return s + ")";
}

void criterion_golden_d10(Outcome& o)
{
    const double t = timed([&] {
        o.expect_eq(f_DC({9, 1}), Partition{10}, "f_DC([9,1])");
        o.expect_eq(f_DC({5, 5}), Partition{6, 4}, "f_DC([5,5])");
        const RationalVector l1 = parse_rational_list("9/2,7/2,5/2,3/2,1/2,2,1,2,1,0");
        const RationalVector l2 = parse_rational_list("5/2,3/2,1/2,3/2,1/2,4,3,2,1,0");
        o.expect_eq(rho_plus({10, 5, 5}, 20), l1, "rho+([10,5,5])");
        o.expect_eq(rho_plus({6, 4, 9, 1}, 20), l2, "rho+([6,4,9,1])");
        o.expect_eq(dot(l1, l1), Rational(205, 4), "|lambda1|^2");
        o.expect_eq(dot(l2, l2), Rational(165, 4), "|lambda2|^2");
        o.expect(dot(l1, l1) > dot(l2, l2), "|lambda1| > |lambda2|");

        const LieType d10{Family::D, 10};
        const auto factors = integral_pseudo_levi(l1, d10);
        std::string names;
        for (const auto& f : factors) names += (names.empty() ? "" : "+") + f.name();
        o.expect_eq(names, std::string("so(10)+so(10)"), "integral pseudo-Levi of lambda1");
        o.expect(integral_pseudo_levi(l2, d10) == factors, "lambda2 has the same integral pseudo-Levi");

        const OrbitTuple a = induced_tuple(l1, factors);
        const OrbitTuple b = induced_tuple(l2, factors);
        // The pair of tuples is {([9,1],[5,5]), ([5,5],[9,1])}; each character takes one.
        std::vector<std::string> got{tuple_partitions(a), tuple_partitions(b)};
        std::sort(got.begin(), got.end());
        o.expect_eq(got[0] + " " + got[1], std::string("([5,5],[9,1]) ([9,1],[5,5])"), "induced tuples");
        o.expect(!orbit_tuple_leq(a, b) && !orbit_tuple_leq(b, a), "induced tuples are incomparable");
    });
    o.time_limit(t, kGoldenLimitSec, "golden example");
}

void criterion_golden_d3(Outcome& o)
{
    const double t = timed([&] {
        const LieType d3{Family::D, 3};
        const RationalVector lambda = parse_rational_list("5/2,3/2,1/2");
        const CheckReport weight = mild_check_classical(lambda, d3, lattice_preset(d3, "weight"));
        o.expect_eq(weight.verdict, Verdict::Fail, "weight lattice verdict");
        o.expect(!weight.witnesses.empty() && weight.witnesses.front().nu == parse_rational_list("2,1,0"),
                 "weight lattice witness is (2,1,0)");
        const CheckReport root = mild_check_classical(lambda, d3, lattice_preset(d3, "root"));
        o.expect_eq(root.verdict, Verdict::Pass, "root lattice verdict");
        // Staged induction from the Cartan subalgebra: three gl(1) blocks, no residual.
        o.expect_eq(induce_staged(Family::B, {1, 1, 1}, 0), Partition{5, 1, 1}, "Ind from the Cartan of so(7)");
        o.expect_eq(induce_staged(Family::D, {1, 1, 1}, 0), Partition{5, 1}, "Ind from the Cartan of so(6)");
    });
    o.time_limit(t, kGoldenLimitSec, "golden example");
}

void run_corpus(Outcome& o, const std::string& name, const std::vector<cli::Instance>& corpus)
{
    std::size_t failures = 0;
    const double t = timed([&] {
        for (const auto& inst : corpus) {
            const CheckReport r = mild_check_classical(inst.lambda, inst.type, inst.lattice);
            if (r.verdict != Verdict::Pass) {
                ++failures;
                o.expect(false, name + ": " + inst.label + " gave " + std::string(to_string(r.verdict)));
            }
        }
    });
    o.note(name + ": " + std::to_string(corpus.size()) + " instances");
    o.expect(!corpus.empty(), name + " corpus is non-empty");
    o.expect_eq(failures, std::size_t{0}, name + " failures out of " + std::to_string(corpus.size()));
    o.time_limit(t, kCorpusLimitSec, name + " corpus");
}

void criterion_q_unipotent(Outcome& o) { run_corpus(o, "q-unipotent", cli::q_unipotent_corpus()); }

void criterion_desk_corpora(Outcome& o)
{
    run_corpus(o, "type A", cli::type_a_corpus());
    run_corpus(o, "antisymmetric", cli::antisymmetric_corpus());
    run_corpus(o, "metaplectic", cli::metaplectic_corpus());
}

std::vector<Partition> special(int n, int eps, int eps_prime)
{
    std::vector<Partition> out;
    for (auto& p : all_partitions(n))
        if (is_special_class(p, eps, eps_prime)) out.push_back(std::move(p));
    return out;
}

std::vector<std::pair<std::vector<int>, int>> levi_shapes(int n)
{
    std::vector<std::pair<std::vector<int>, int>> out;
    for (int z = 0; z <= n; ++z)
        for (const auto& p : all_partitions(n - z)) out.emplace_back(p.parts(), z);
    return out;
}

long long staged_levi_positive_roots(Family fam, const std::vector<int>& blocks, int z)
{
    long long n = positive_roots(fam, z);
    for (int a : blocks) n += static_cast<long long>(a) * (a - 1) / 2;
    return n;
}

void criterion_properties(Outcome& o)
{
    const double t = timed([&] {
        std::size_t collapse_bad = 0;
        for (int n = 1; n <= 14; ++n)
            for (const auto& d : all_partitions(n))
                for (const auto x : {Family::B, Family::C, Family::D}) {
                    if ((n % 2 == 1) != (x == Family::B)) continue;
                    if (collapse(d, x) != brute_collapse_oracle(d, x)) ++collapse_bad;
                }
        o.expect_eq(collapse_bad, std::size_t{0}, "collapse disagreements with the oracle, N <= 14");

        std::size_t roundtrip_bad = 0;
        for (int n = 0; n <= 8; ++n) {
            for (const auto& d : special(2 * n + 1, 0, 1))
                roundtrip_bad += !(is_special_class(f_BC(d), 1, 0) && f_CB(f_BC(d)) == d);
            for (const auto& d : special(2 * n, 1, 0))
                roundtrip_bad += !(is_special_class(f_CB(d), 0, 1) && f_BC(f_CB(d)) == d);
            for (const auto& d : special(2 * n, 0, 0))
                roundtrip_bad += !(is_special_class(f_DC(d), 1, 1) && f_CD(f_DC(d)) == d);
            for (const auto& d : special(2 * n, 1, 1))
                roundtrip_bad += !(is_special_class(f_CD(d), 0, 0) && f_DC(f_CD(d)) == d);
        }
        o.expect_eq(roundtrip_bad, std::size_t{0}, "f round-trip failures, n <= 8");

        std::size_t order_bad = 0;
        auto order = [&](const std::vector<Partition>& dom, auto f) {
            for (const auto& p : dom)
                for (const auto& q : dom)
                    if (dominates(q, p) && !dominates(f(q), f(p))) ++order_bad;
        };
        for (int n = 1; n <= 6; ++n) {
            order(special(2 * n + 1, 0, 1), [](const Partition& d) { return f_BC(d); });
            order(special(2 * n, 1, 0), [](const Partition& d) { return f_CB(d); });
            order(special(2 * n, 0, 0), [](const Partition& d) { return f_DC(d); });
            order(special(2 * n, 1, 1), [](const Partition& d) { return f_CD(d); });
        }
        o.expect_eq(order_bad, std::size_t{0}, "f order-preservation failures, n <= 6");

        std::size_t induction_bad = 0;
        for (const auto fam : {Family::A, Family::B, Family::C, Family::D})
            for (int n = fam == Family::D ? 2 : 1; n <= 6; ++n)
                for (auto [blocks, z] : levi_shapes(n)) {
                    if (fam == Family::A && z > 0) continue;
                    const Partition d = induce_staged(fam, blocks, z);
                    std::sort(blocks.begin(), blocks.end());
                    do {
                        if (induce_staged(fam, blocks, z) != d) ++induction_bad;
                    } while (std::next_permutation(blocks.begin(), blocks.end()));
                    const long long nilradical = positive_roots(fam, n) - staged_levi_positive_roots(fam, blocks, z);
                    if (orbit_dimension(d, fam) != 2 * nilradical) ++induction_bad;
                }
        o.expect_eq(induction_bad, std::size_t{0}, "block-order or dimension failures, rank <= 6");

        std::size_t richardson_bad = 0;
        for (int n = 1; n <= 5; ++n)
            for (const auto& [blocks, z] : levi_shapes(n)) {
                const Partition c_side = induce_staged(Family::C, blocks, z);
                if (f_BC(induce_staged(Family::B, blocks, z)) != c_side) ++richardson_bad;
                if (z == 0 && f_DC(induce_staged(Family::D, blocks, 0)) != c_side) ++richardson_bad;
            }
        o.expect_eq(richardson_bad, std::size_t{0}, "Richardson cross-duality failures, n <= 5");

        for (const char* name : {"B2", "C2", "D3", "B3", "C3"}) {
            const NormComparisonReport r = norm_comparison_harness(LieType::parse(name), Rational(16));
            o.note(std::string("norm comparison on ") + name + ": " + std::to_string(r.vectors) + " vectors, " +
                   std::to_string(r.comparisons) + " comparisons, " + std::to_string(r.equality_cases) + " equality cases");
            o.expect(r.ok && r.violations.empty(), std::string("norm comparison on ") + name);
            o.expect(r.comparisons > 0, std::string("norm comparison on ") + name + " compared something");
        }
    });
    o.time_limit(t, kPropertyLimitSec, "property suites");
}

void criterion_xi(Outcome& o)
{
    const double t = timed([&] {
        const std::vector<Rational> grid{Rational(0), Rational(1, 4), Rational(1, 2), Rational(-1, 3)};
        std::size_t bad = 0;
        std::size_t nonunique = 0;
        for (int n = 1; n <= 7; ++n)
            for (const auto& q : all_partitions(n))
                for (const auto& r : grid) {
                    const auto brute = testing::xi_brute_force(q, r);
                    const RationalVector xi = xi_r(q, r);
                    const auto mins = xi_minimizers(q, r);
                    if (dot(xi, xi) != brute.min_norm_sq || mins != brute.minimizers) ++bad;
                    if (mins.size() > 1) ++nonunique;
                }
        o.expect_eq(bad, std::size_t{0}, "xi minimality disagreements, n <= 7");
        o.expect(nonunique > 0, "r in {0, 1/2} produced non-unique minimizer sets");

        std::size_t mono_bad = 0;
        for (int n = 1; n <= 7; ++n) {
            const auto ps = all_partitions(n);
            for (const auto& r : grid) {
                const bool strict = r != 0 && r != Rational(1, 2);
                for (const auto& a : ps)
                    for (const auto& b : ps) {
                        if (!dominates(b, a)) continue;
                        const RationalVector xa = xi_r(a, r);
                        const RationalVector xb = xi_r(b, r);
                        const Rational na = dot(xa, xa);
                        const Rational nb = dot(xb, xb);
                        if (na > nb || (strict && (na == nb) != (a == b))) ++mono_bad;
                    }
            }
        }
        o.expect_eq(mono_bad, std::size_t{0}, "xi monotonicity failures, n <= 7");
    });
    o.time_limit(t, kPropertyLimitSec, "xi oracles");
}

bool same_report(const CheckReport& a, const CheckReport& b)
{
    return a.verdict == b.verdict && a.witnesses == b.witnesses && a.points_scanned == b.points_scanned &&
           a.candidates == b.candidates && a.norm_sq_lambda == b.norm_sq_lambda && a.n_lambda == b.n_lambda;
}

void criterion_oracle(Outcome& o)
{
    const double t = timed([&] {
        const auto corpus = testing::oracle_corpus();
        o.expect_eq(corpus.size(), std::size_t{200}, "corpus size");
        std::size_t disagree = 0;
        std::size_t nondeterministic = 0;
        std::size_t fails = 0;
        for (const auto& inst : corpus) {
            CheckOptions one;
            CheckOptions four;
            four.jobs = 4;
            const CheckReport a = mild_check_classical(inst.lambda, inst.type, inst.lattice, one);
            const CheckReport b = mild_check_classical(inst.lambda, inst.type, inst.lattice, four);
            const CheckReport oracle = brute_force_mild_oracle(inst.lambda, inst.type, inst.lattice);
            if (!same_report(a, b)) {
                ++nondeterministic;
                o.expect(false, inst.label + ": jobs 1 and jobs 4 differ");
            }
            if (a.verdict != oracle.verdict) {
                ++disagree;
                o.expect(false, inst.label + ": checker " + std::string(to_string(a.verdict)) + ", oracle " +
                                    std::string(to_string(oracle.verdict)));
            } else if (a.verdict == Verdict::Fail &&
                       std::none_of(oracle.witnesses.begin(), oracle.witnesses.end(),
                                    [&](const Witness& w) { return w.nu == a.witnesses.front().nu; })) {
                ++disagree;
                o.expect(false, inst.label + ": checker witness is not among the oracle witnesses");
            }
            fails += a.verdict == Verdict::Fail;
        }
        o.expect_eq(disagree, std::size_t{0}, "oracle disagreements");
        o.expect_eq(nondeterministic, std::size_t{0}, "non-deterministic reports");
        o.note(std::to_string(fails) + " Fail verdicts among " + std::to_string(corpus.size()) + " instances");
        o.expect(fails > 0, "corpus exercises Fail verdicts");
    });
    o.time_limit(t, kCorpusLimitSec, "oracle agreement");
}

void criterion_exceptional(Outcome& o)
{
    for (const char* name : {"G2", "F4"}) {
        const LieType type = LieType::parse(name);
        const RootSystem rs = build_root_system(type);
        for (const char* preset : {"root", "weight"}) {
            CheckReport r;
            const double t = timed([&] { r = mild_check_exceptional(rs.rho(), type, lattice_preset(type, preset)); });
            const std::string what = std::string(name) + " rho, " + preset + " lattice";
            o.expect_eq(r.verdict, Verdict::SufficientPass, what);
            o.time_limit(t, kExceptionalLimitSec, what);
        }
    }

    const LieType e8 = LieType::parse("E8");
    RationalVector lambda = build_root_system(e8).rho();
    for (auto& x : lambda) x /= 6;
    CheckOptions one;
    one.max_points = kE8PointCap;
    CheckOptions four = one;
    four.jobs = 4;
    const Lattice root = lattice_preset(e8, "root");
    CheckReport a;
    CheckReport b;
    const double t = timed([&] {
        try {
            a = mild_check_exceptional(lambda, e8, root, one);
            b = mild_check_exceptional(lambda, e8, root, four);
        } catch (const DomainError& e) {
            o.expect(false, std::string("E8 run: ") + e.what());
        }
    });
    o.expect(a.norm_sq_lambda <= Rational(40), "E8 lambda has norm^2 <= 40 (got " + a.norm_sq_lambda.to_string() + ")");
    o.expect(a.points_scanned > 0 && a.points_scanned <= kE8PointCap, "E8 run stays under the point cap");
    o.note("E8 lambda = rho/6: |lambda|^2 = " + a.norm_sq_lambda.to_string() + ", " + std::to_string(a.points_scanned) +
           " points, verdict " + std::string(to_string(a.verdict)));
    o.expect(same_report(a, b), "E8 report identical for jobs 1 and 4");
    o.time_limit(t, 2 * kExceptionalLimitSec, "E8 runs");
}

struct Criterion {
    int id;
    const char* title;
    std::function<void(Outcome&)> run;
};

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"acceptance criteria"};
    int only = 0;
    bool verbose = false;
    app.add_option("--only", only, "run a single criterion (1-8)")->check(CLI::Range(1, 8));
    app.add_flag("-v,--verbose", verbose, "list every failed expectation");
    CLI11_PARSE(app, argc, argv);

    const std::vector<Criterion> criteria{
        {1, "golden example counterexample1 (D10)", criterion_golden_d10},
        {2, "golden example root_vs_weight (D3) and Cartan inductions", criterion_golden_d3},
        {3, "q-unipotent corpus passes", criterion_q_unipotent},
        {4, "type A, antisymmetric and metaplectic corpora pass", criterion_desk_corpora},
        {5, "property suites", criterion_properties},
        {6, "xi minimality and monotonicity oracles", criterion_xi},
        {7, "checker agrees with the brute-force oracle; deterministic across jobs", criterion_oracle},
        {8, "exceptional mode: G2/F4 rho and deterministic E8 run", criterion_exceptional},
    };

    bool all_ok = true;
    for (const auto& c : criteria) {
        if (only != 0 && c.id != only) continue;
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.expect(false, std::string("unexpected exception: ") + e.what());
        }
        const double t = seconds_since(start);
        std::cout << (o.ok() ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << "  [" << o.checks()
                  << " checks, " << std::fixed << std::setprecision(2) << t << " s]\n";
        const std::size_t shown = verbose ? o.failures().size() : std::min<std::size_t>(o.failures().size(), 5);
        for (std::size_t i = 0; i < shown; ++i) std::cout << "      " << o.failures()[i] << '\n';
        if (verbose)
            for (const auto& n : o.notes()) std::cout << "      note: " << n << '\n';
        if (shown < o.failures().size()) std::cout << "      ... " << o.failures().size() - shown << " more\n";
        all_ok = all_ok && o.ok();
    }
    return all_ok ? 0 : 1;
}
