#include "orbitdual/checker.hpp"

#include "chunk_runner.hpp"
#include "orbitdual/enumerate.hpp"
#include "orbitdual/error.hpp"
#include "orbitdual/linalg.hpp"
#include "orbitdual/root_system.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <memory>
#include <numeric>

namespace orbitdual {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void atomic_min(std::atomic<std::size_t>& target, std::size_t value)
{
    std::size_t cur = target.load();
    while (value < cur && !target.compare_exchange_weak(cur, value)) {
    }
}

std::vector<ChamberBlock> chamber_blocks(const std::vector<Factor>& factors)
{
    std::vector<ChamberBlock> blocks;
    for (const auto& f : factors) {
        ChamberBlock b;
        b.indices = f.indices;
        b.signs = f.signs;
        switch (f.family) {
        case Family::A: b.kind = ChamberBlock::Kind::OrderedChain; break;
        case Family::B: case Family::C: b.kind = ChamberBlock::Kind::SignedChain; break;
        case Family::D: b.kind = f.rank() >= 2 ? ChamberBlock::Kind::EvenChain : ChamberBlock::Kind::Free; break;
        default: break;
        }
        blocks.push_back(std::move(b));
    }
    return blocks;
}

void check_lattice_dims(const Lattice& lattice, std::size_t dim)
{
    if (lattice.ambient_dim() != dim)
        throw DomainError(ErrorKind::DimensionMismatch, "lattice dimension " + std::to_string(lattice.ambient_dim()) +
                                                            " does not match " + std::to_string(dim) + " coordinates");
}

struct ChunkOutcome {
    std::uint64_t candidates = 0;
    std::uint64_t points = 0;
    bool hit = false;
    bool aborted = false;
    Witness witness;
};

} // namespace

std::string_view to_string(Verdict v)
{
    switch (v) {
    case Verdict::Pass: return "Pass";
    case Verdict::Fail: return "Fail";
    case Verdict::SufficientPass: return "SufficientPass";
    case Verdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

CheckReport mild_check_classical(const RationalVector& lambda, const LieType& g, const Lattice& lattice,
                                 const CheckOptions& options)
{
    const auto start = Clock::now();
    if (!g.classical()) throw DomainError(ErrorKind::NonClassicalType, g.name() + " is not classical");
    const RootSystem rs = build_root_system(g);
    if (lambda.size() != rs.dim())
        throw DomainError(ErrorKind::DimensionMismatch, "expected " + std::to_string(rs.dim()) + " coordinates for " + g.name());
    check_lattice_dims(lattice, rs.dim());
    if (!lies_in_weight_lattice(lattice, rs))
        throw DomainError(ErrorKind::InvalidLattice, "lattice must lie in the weight lattice of " + g.name());

    CheckReport report;
    report.mode = "classical";
    report.type = g;
    report.lattice = lattice;
    report.lambda = lambda;
    report.norm_sq_lambda = dot(lambda, lambda);
    report.form_normalization = "euclidean";
    report.factors = integral_pseudo_levi(lambda, g);
    report.lambda_orbits = induced_tuple(lambda, report.factors);
    report.canonicalized = options.canonicalize && lattice_contains(lattice, root_lattice(rs));

    const auto& factors = report.factors;
    const auto& target = report.lambda_orbits;
    const Rational radius = report.norm_sq_lambda;

    std::unique_ptr<ChamberBall> chamber;
    std::unique_ptr<CosetBall> ball;
    std::unique_ptr<LatticeMembership> membership;
    std::vector<Rational> chamber_tops;
    std::vector<std::int64_t> ball_tops;
    if (report.canonicalized) {
        chamber = std::make_unique<ChamberBall>(lambda, chamber_blocks(factors), common_denominator(lattice), radius, true);
        membership = std::make_unique<LatticeMembership>(lattice);
        chamber_tops = chamber->top_level_values();
    } else {
        ball = std::make_unique<CosetBall>(lambda, lattice, identity_matrix(rs.dim()), radius, true);
        ball_tops = ball->top_level_values();
    }
    const std::size_t n_chunks = report.canonicalized ? chamber_tops.size() : ball_tops.size();
    const bool zero_dim = report.canonicalized ? false : ball->rank() == 0;

    std::vector<ChunkOutcome> outcomes(std::max<std::size_t>(n_chunks, 1));
    std::atomic<std::size_t> best_hit{std::numeric_limits<std::size_t>::max()};
    std::atomic<std::uint64_t> total{0};

    auto examine = [&](std::size_t chunk, ChunkOutcome& out, const RationalVector& nu, const Rational& norm) {
        ++out.candidates;
        if (total.fetch_add(1) + 1 > options.max_points) {
            out.aborted = true;
            return false;
        }
        if (best_hit.load() < chunk) return false;
        if (membership) {
            RationalVector diff(nu.size());
            for (std::size_t i = 0; i < nu.size(); ++i) diff[i] = nu[i] - lambda[i];
            if (!membership->contains(diff)) return true;
        }
        ++out.points;
        const OrbitTuple t = induced_tuple(nu, factors);
        if (orbit_tuple_leq(target, t)) {
            out.hit = true;
            out.witness = Witness{nu, norm, "induced orbits of nu dominate those of lambda in every factor"};
            atomic_min(best_hit, chunk);
            return false;
        }
        return true;
    };

    auto run_chunk = [&](std::size_t i) {
        if (best_hit.load() < i) return;
        ChunkOutcome& out = outcomes[i];
        if (report.canonicalized) {
            chamber->for_each_in_chunk(chamber_tops[i], [&](const RationalVector& nu, const Rational& norm) {
                return examine(i, out, nu, norm);
            });
        } else if (zero_dim) {
            ball->for_each([&](std::span<const std::int64_t> c, const Rational& norm) {
                return examine(i, out, ball->point(c), norm);
            });
        } else {
            ball->for_each_in_chunk(ball_tops[i], [&](std::span<const std::int64_t> c, const Rational& norm) {
                return examine(i, out, ball->point(c), norm);
            });
        }
    };
    detail::run_chunks(zero_dim ? 1 : n_chunks, options.jobs, run_chunk);

    std::size_t last = outcomes.size();
    for (std::size_t i = 0; i < outcomes.size(); ++i)
        if (outcomes[i].hit) {
            last = i + 1;
            break;
        }
    for (std::size_t i = 0; i < last; ++i) {
        if (outcomes[i].aborted)
            throw DomainError(ErrorKind::ResourceLimit,
                              "point cap " + std::to_string(options.max_points) + " reached before the ball was exhausted");
        report.candidates += outcomes[i].candidates;
        report.points_scanned += outcomes[i].points;
    }
    if (outcomes[last - 1].hit) {
        report.verdict = Verdict::Fail;
        report.witnesses.push_back(outcomes[last - 1].witness);
    } else {
        report.verdict = Verdict::Pass;
    }
    report.wall_time = seconds_since(start);
    return report;
}

CheckReport mild_check_exceptional(const RationalVector& lambda, const LieType& t, const Lattice& lattice,
                                   const CheckOptions& options)
{
    const auto start = Clock::now();
    const RootSystem rs = build_root_system(t);
    if (lambda.size() != rs.dim())
        throw DomainError(ErrorKind::DimensionMismatch, "expected " + std::to_string(rs.dim()) + " coordinates for " + t.name());
    check_lattice_dims(lattice, rs.dim());

    CheckReport report;
    report.mode = "exceptional";
    report.type = t;
    report.lattice = lattice;
    report.lambda = lambda;
    report.norm_sq_lambda = rs.norm_sq(lambda);
    report.n_lambda = n_roots_vanishing(lambda, rs);
    report.form_normalization = t.classical() ? "euclidean" : "simple-root Gram matrix, long roots of norm 2";

    // Integer images of (lambda, alpha) and (b_i, alpha) over positive roots.
    const std::size_t npos = rs.positive_count();
    const std::size_t k = lattice.rank();
    std::vector<Rational> lam_pair(npos);
    std::vector<std::vector<Rational>> basis_pair(k, std::vector<Rational>(npos));
    std::int64_t den = 1;
    for (std::size_t a = 0; a < npos; ++a) {
        lam_pair[a] = rs.inner(lambda, rs.roots[a]);
        den = std::lcm(den, lam_pair[a].den());
        for (std::size_t i = 0; i < k; ++i) {
            basis_pair[i][a] = rs.inner(lattice.basis[i], rs.roots[a]);
            den = std::lcm(den, basis_pair[i][a].den());
        }
    }
    std::vector<std::int64_t> lam_int(npos);
    std::vector<std::int64_t> basis_int(k * npos);
    for (std::size_t a = 0; a < npos; ++a) {
        lam_int[a] = (lam_pair[a] * Rational(den)).num();
        for (std::size_t i = 0; i < k; ++i) basis_int[i * npos + a] = (basis_pair[i][a] * Rational(den)).num();
    }

    const CosetBall ball(lambda, lattice, rs.form, report.norm_sq_lambda, true);
    const auto tops = ball.top_level_values();
    struct ExOutcome {
        std::uint64_t points = 0;
        bool aborted = false;
        std::vector<Witness> witnesses;
    };
    const std::size_t n_chunks = std::max<std::size_t>(tops.size(), 1);
    std::vector<ExOutcome> outcomes(n_chunks);
    std::atomic<std::uint64_t> total{0};

    auto visit = [&](ExOutcome& out, std::span<const std::int64_t> c, const Rational& norm) {
        ++out.points;
        if (total.fetch_add(1) + 1 > options.max_points) {
            out.aborted = true;
            return false;
        }
        int zeros = 0;
        for (std::size_t a = 0; a < npos; ++a) {
            std::int64_t v = lam_int[a];
            for (std::size_t i = 0; i < k; ++i) v += c[i] * basis_int[i * npos + a];
            if (v == 0) ++zeros;
        }
        const int n_nu = 2 * zeros;
        if (n_nu <= report.n_lambda)
            out.witnesses.push_back(Witness{ball.point(c), norm,
                                            "n_nu = " + std::to_string(n_nu) + " <= n_lambda = " + std::to_string(report.n_lambda)});
        return true;
    };
    detail::run_chunks(tops.empty() ? (k == 0 ? 1 : 0) : tops.size(), options.jobs, [&](std::size_t i) {
        if (tops.empty()) {
            ball.for_each([&](std::span<const std::int64_t> c, const Rational& norm) { return visit(outcomes[i], c, norm); });
        } else {
            ball.for_each_in_chunk(tops[i], [&](std::span<const std::int64_t> c, const Rational& norm) {
                return visit(outcomes[i], c, norm);
            });
        }
    });

    for (auto& out : outcomes) {
        if (out.aborted)
            throw DomainError(ErrorKind::ResourceLimit,
                              "point cap " + std::to_string(options.max_points) + " reached before the ball was exhausted");
        report.points_scanned += out.points;
        for (auto& w : out.witnesses) report.witnesses.push_back(std::move(w));
    }
    report.candidates = report.points_scanned;
    std::sort(report.witnesses.begin(), report.witnesses.end(),
              [](const Witness& a, const Witness& b) { return a.nu < b.nu; });
    report.verdict = report.witnesses.empty() ? Verdict::SufficientPass : Verdict::Inconclusive;
    report.wall_time = seconds_since(start);
    return report;
}

} // namespace orbitdual
