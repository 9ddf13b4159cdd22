#include <doctest.h>

#include "corpus.hpp"
#include "orbitdual/checker.hpp"
#include "orbitdual/error.hpp"
#include "orbitdual/infchar.hpp"
#include "orbitdual/root_system.hpp"

#include <algorithm>

using namespace orbitdual;

namespace {

RationalVector V(std::string_view s) { return parse_rational_list(s); }

/// Re-derives a Fail witness from scratch.
void require_valid_witness(const CheckReport& r)
{
    REQUIRE(!r.witnesses.empty());
    const Witness& w = r.witnesses.front();
    RationalVector diff = w.nu;
    for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= r.lambda[i];
    REQUIRE(LatticeMembership(r.lattice).contains(diff));
    REQUIRE(dot(w.nu, w.nu) == w.norm_sq);
    REQUIRE(w.norm_sq < r.norm_sq_lambda);
    const auto factors = integral_pseudo_levi(r.lambda, r.type);
    REQUIRE(orbit_tuple_leq(induced_tuple(r.lambda, factors), induced_tuple(w.nu, factors)));
}

} // namespace

TEST_CASE("classical checker on the D3 characters")
{
    const LieType d3 = LieType::parse("D3");
    const RationalVector lambda = V("5/2,3/2,1/2");
    const CheckReport weight = mild_check_classical(lambda, d3, lattice_preset(d3, "weight"));
    CHECK(weight.verdict == Verdict::Fail);
    REQUIRE(weight.witnesses.size() == 1);
    CHECK(weight.witnesses[0].nu == V("2,1,0"));
    CHECK(weight.canonicalized);
    require_valid_witness(weight);

    const CheckReport root = mild_check_classical(lambda, d3, lattice_preset(d3, "root"));
    CHECK(root.verdict == Verdict::Pass);
    CHECK(root.witnesses.empty());
    CHECK(root.norm_sq_lambda == Rational(35, 4));

    // The full-ball enumeration agrees.
    CheckOptions full;
    full.canonicalize = false;
    const CheckReport weight_full = mild_check_classical(lambda, d3, lattice_preset(d3, "weight"), full);
    CHECK(weight_full.verdict == Verdict::Fail);
    CHECK_FALSE(weight_full.canonicalized);
    require_valid_witness(weight_full);
    CHECK(mild_check_classical(lambda, d3, lattice_preset(d3, "root"), full).verdict == Verdict::Pass);
}

TEST_CASE("classical checker on the first D10 character")
{
    const LieType d10 = LieType::parse("D10");
    const RationalVector l1 = q_unipotent_infchar({10, 5, 5}, d10);
    const CheckReport r = mild_check_classical(l1, d10, lattice_preset(d10, "root"));
    CHECK(r.verdict == Verdict::Pass);
    CHECK(r.factors.size() == 2);
    CHECK(r.points_scanned > 0);
}

TEST_CASE("classical checker errors")
{
    CHECK_THROWS_AS(mild_check_classical(V("1,1"), LieType::parse("G2"), lattice_preset(LieType::parse("G2"), "root")),
                    DomainError);
    // A lattice that leaves the weight lattice of D2 is rejected.
    const Lattice quarter = make_lattice("quarter", {V("1/4,0"), V("0,1")});
    CHECK_THROWS_AS(mild_check_classical(V("1,0"), LieType::parse("D2"), quarter), DomainError);
    CheckOptions tiny;
    tiny.max_points = 3;
    CHECK_THROWS_AS(mild_check_classical(V("5,4,3,2"), LieType::parse("B4"), lattice_preset(LieType::parse("B4"), "integer"), tiny),
                    DomainError);
}

TEST_CASE("classical checker is independent of the worker count")
{
    int fails = 0;
    const auto corpus = testing::oracle_corpus();
    for (std::size_t i = 0; i < corpus.size(); i += 4) {
        const auto& inst = corpus[i];
        CheckOptions one;
        CheckOptions four;
        four.jobs = 4;
        const CheckReport a = mild_check_classical(inst.lambda, inst.type, inst.lattice, one);
        const CheckReport b = mild_check_classical(inst.lambda, inst.type, inst.lattice, four);
        INFO(inst.label);
        REQUIRE(a.verdict == b.verdict);
        REQUIRE(a.witnesses == b.witnesses);
        if (a.verdict == Verdict::Fail) {
            ++fails;
            require_valid_witness(a);
        }
    }
    CHECK(fails > 0);
}

TEST_CASE("brute-force oracle")
{
    CHECK(brute_force_mild_oracle(V("1/2"), LieType::parse("C1"), lattice_preset(LieType::parse("C1"), "root")).verdict ==
          Verdict::Pass);
    const LieType b2 = LieType::parse("B2");
    CHECK(brute_force_mild_oracle(V("1,0"), b2, lattice_preset(b2, "root")).verdict ==
          mild_check_classical(V("1,0"), b2, lattice_preset(b2, "root")).verdict);
    const LieType d3 = LieType::parse("D3");
    const CheckReport r = brute_force_mild_oracle(V("5/2,3/2,1/2"), d3, lattice_preset(d3, "weight"));
    CHECK(r.verdict == Verdict::Fail);
    bool found = false;
    for (const auto& w : r.witnesses) found = found || w.nu == V("2,1,0");
    CHECK(found);
    CHECK(std::is_sorted(r.witnesses.begin(), r.witnesses.end(), [](const Witness& a, const Witness& b) { return a.nu < b.nu; }));
    CHECK_THROWS_AS(brute_force_mild_oracle(V("1,1,1,1,1,1"), LieType::parse("B6"), lattice_preset(LieType::parse("B6"), "root")),
                    DomainError);
    CHECK_THROWS_AS(brute_force_mild_oracle(V("6,0"), b2, lattice_preset(b2, "root")), DomainError);
}

TEST_CASE("classical checker agrees with the oracle on a sample")
{
    const auto corpus = testing::oracle_corpus();
    for (std::size_t i = 0; i < corpus.size(); i += 10) {
        const auto& inst = corpus[i];
        INFO(inst.label);
        const CheckReport fast = mild_check_classical(inst.lambda, inst.type, inst.lattice);
        const CheckReport slow = brute_force_mild_oracle(inst.lambda, inst.type, inst.lattice);
        REQUIRE(fast.verdict == slow.verdict);
        if (fast.verdict == Verdict::Fail)
            REQUIRE(std::any_of(slow.witnesses.begin(), slow.witnesses.end(),
                                [&](const Witness& w) { return w.nu == fast.witnesses.front().nu; }));
    }
}

TEST_CASE("exceptional checker")
{
    const LieType g2 = LieType::parse("G2");
    const RootSystem rs = build_root_system(g2);
    const CheckReport r = mild_check_exceptional(rs.rho(), g2, lattice_preset(g2, "root"));
    CHECK(r.verdict == Verdict::SufficientPass);
    CHECK(r.n_lambda == 0);
    CHECK(r.witnesses.empty());
    CHECK(r.form_normalization.find("2") != std::string::npos);

    const CheckReport zero = mild_check_exceptional(V("0,0"), g2, lattice_preset(g2, "root"));
    CHECK(zero.verdict == Verdict::SufficientPass);
    CHECK(zero.points_scanned == 0);

    const LieType f4 = LieType::parse("F4");
    const RootSystem f4rs = build_root_system(f4);
    CHECK(mild_check_exceptional(f4rs.rho(), f4, lattice_preset(f4, "weight")).verdict == Verdict::SufficientPass);

    // rho/2 in G2 has a regular vector strictly inside its ball only if the
    // count test fails; either way the verdict never claims Fail.
    RationalVector half = rs.rho();
    for (auto& x : half) x = x / Rational(2);
    const CheckReport h = mild_check_exceptional(half, g2, lattice_preset(g2, "weight"));
    CHECK(h.verdict != Verdict::Fail);
    if (h.verdict == Verdict::Inconclusive) {
        CHECK_FALSE(h.witnesses.empty());
        CHECK(std::is_sorted(h.witnesses.begin(), h.witnesses.end(), [](const Witness& a, const Witness& b) { return a.nu < b.nu; }));
    }

    // Classical types are accepted for cross-validation.
    const LieType b2 = LieType::parse("B2");
    CHECK(mild_check_exceptional(V("3/2,1/2"), b2, lattice_preset(b2, "root")).verdict == Verdict::SufficientPass);
}

TEST_CASE("norm comparison harness")
{
    const auto c2 = norm_comparison_harness(LieType::parse("C2"), 16);
    CHECK(c2.ok);
    CHECK(c2.comparisons > 0);
    const auto b2 = norm_comparison_harness(LieType::parse("B2"), 16);
    CHECK(b2.ok);
    const auto d3 = norm_comparison_harness(LieType::parse("D3"), 16);
    CHECK(d3.ok);
    CHECK(d3.equality_cases > 0);
    CHECK_THROWS_AS(norm_comparison_harness(LieType::parse("B5"), 4), DomainError);
    CHECK_THROWS_AS(norm_comparison_harness(LieType::parse("G2"), 4), DomainError);
}
