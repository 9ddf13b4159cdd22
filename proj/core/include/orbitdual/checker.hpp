#pragma once

#include "orbitdual/induction.hpp"
#include "orbitdual/lattice.hpp"
#include "orbitdual/lie_type.hpp"
#include "orbitdual/rational.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace orbitdual {

enum class Verdict { Pass, Fail, SufficientPass, Inconclusive };
std::string_view to_string(Verdict v);

struct Witness {
    RationalVector nu;
    Rational norm_sq;
    std::string reason;
    friend bool operator==(const Witness&, const Witness&) = default;
};

/// Outcome of a mild-unipotence run.
/// Invariant: Fail and Inconclusive carry at least one witness; Pass and
/// SufficientPass carry none.
struct CheckReport {
    Verdict verdict = Verdict::Pass;
    std::string mode; // "classical", "exceptional", "oracle"
    LieType type;
    Lattice lattice;
    RationalVector lambda;
    Rational norm_sq_lambda;
    std::uint64_t points_scanned = 0;   // points of lambda + L inside the strict ball that were examined
    std::uint64_t candidates = 0;       // enumeration leaves before the membership test
    bool canonicalized = false;
    std::vector<Factor> factors;        // classical: factors of the integral pseudo-Levi
    OrbitTuple lambda_orbits;           // classical: induced orbits of lambda
    int n_lambda = -1;                  // exceptional: roots orthogonal to lambda
    std::string form_normalization;
    std::vector<Witness> witnesses;
    double wall_time = 0.0;
};

struct CheckOptions {
    unsigned jobs = 1;
    std::uint64_t max_points = 1'000'000'000ULL;
    bool canonicalize = true;
};

/// Verdict of the closure criterion: Fail iff some nu in lambda + L with
/// |nu|^2 < |lambda|^2 has induced orbits dominating those of lambda in every
/// factor of the integral pseudo-Levi. Stops at the first such nu in the
/// deterministic enumeration order.
///
/// Canonical mode enumerates only the chamber of the integral Weyl group,
/// which preserves lambda + L when the root lattice lies in L. It falls back
/// to the full ball otherwise. L must lie in the weight lattice (InvalidLattice).
CheckReport mild_check_classical(const RationalVector& lambda, const LieType& g, const Lattice& lattice,
                                 const CheckOptions& options = {});

/// Root-counting sufficient test: SufficientPass iff every nu in the strict
/// ball has more orthogonal roots than lambda; otherwise Inconclusive with all
/// violating nu, sorted. Never returns Fail.
CheckReport mild_check_exceptional(const RationalVector& lambda, const LieType& t, const Lattice& lattice,
                                   const CheckOptions& options = {});

inline constexpr int kOracleMaxRank = 5;
inline constexpr std::int64_t kOracleMaxNormSq = 30;

/// Independent reimplementation of mild_check_classical: box scan of
/// coefficient vectors, integral system and centralizers recomputed from root
/// sets, Richardson orbits via one-shot collapse. Collects every witness.
/// Throws BoundExceeded above rank 5 or |lambda|^2 > 30.
CheckReport brute_force_mild_oracle(const RationalVector& lambda, const LieType& g, const Lattice& lattice);

struct NormComparisonReport {
    bool ok = true;
    std::uint64_t vectors = 0;     // integral dominant nu examined
    std::uint64_t comparisons = 0; // (orbit, nu) pairs with orbit below the induced orbit
    std::uint64_t equality_cases = 0;
    std::vector<std::string> violations;
};

inline constexpr int kNormComparisonMaxRank = 4;

/// For every orbit O of the dual algebra of type `dual_type` and every
/// integral dominant nu with |nu|^2 <= max_radius_sq: if O lies below
/// Ind_{centralizer of nu} 0 then |nu| >= |h_O / 2|, and equality forces equal
/// absolute-value multisets.
NormComparisonReport norm_comparison_harness(const LieType& dual_type, const Rational& max_radius_sq,
                                             int max_rank = kNormComparisonMaxRank);

} // namespace orbitdual
