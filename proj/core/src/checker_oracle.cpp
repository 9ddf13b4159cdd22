#include "orbitdual/checker.hpp"

#include "orbitdual/enumerate.hpp"
#include "orbitdual/error.hpp"
#include "orbitdual/infchar.hpp"
#include "orbitdual/linalg.hpp"
#include "orbitdual/root_system.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

namespace orbitdual {
namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x)
    {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

std::vector<int> support(const RationalVector& r)
{
    std::vector<int> s;
    for (std::size_t i = 0; i < r.size(); ++i)
        if (!r[i].is_zero()) s.push_back(static_cast<int>(i));
    return s;
}

/// Connected pieces of a root set restricted to `coords`, with a flag telling
/// whether the piece carries more than gl roots (a short/long root on one
/// coordinate, or both e_i - e_j and e_i + e_j types on one pair).
struct Piece {
    std::vector<int> coords;
    bool has_single = false;
    Rational single_coeff;
    bool both_signs = false;
};

std::vector<Piece> pieces(const std::vector<int>& coords, const std::vector<RationalVector>& roots, std::size_t dim)
{
    UnionFind uf(dim);
    std::vector<char> in(dim, 0);
    for (int c : coords) in[static_cast<std::size_t>(c)] = 1;
    for (const auto& r : roots) {
        const auto s = support(r);
        if (s.size() == 2 && in[static_cast<std::size_t>(s[0])] && in[static_cast<std::size_t>(s[1])]) uf.unite(s[0], s[1]);
    }
    std::vector<Piece> out;
    std::vector<int> piece_of(dim, -1);
    for (int c : coords) {
        const int root = uf.find(c);
        if (piece_of[static_cast<std::size_t>(root)] < 0) {
            piece_of[static_cast<std::size_t>(root)] = static_cast<int>(out.size());
            out.emplace_back();
        }
        out[static_cast<std::size_t>(piece_of[static_cast<std::size_t>(root)])].coords.push_back(c);
    }
    for (const auto& r : roots) {
        const auto s = support(r);
        if (s.empty() || !in[static_cast<std::size_t>(s[0])]) continue;
        Piece& p = out[static_cast<std::size_t>(piece_of[static_cast<std::size_t>(uf.find(s[0]))])];
        if (s.size() == 1) {
            p.has_single = true;
            p.single_coeff = r[static_cast<std::size_t>(s[0])].abs();
        } else if (s.size() == 2 && in[static_cast<std::size_t>(s[1])]) {
            const bool same = r[static_cast<std::size_t>(s[0])].sign() == r[static_cast<std::size_t>(s[1])].sign();
            for (const auto& other : roots) {
                const auto t = support(other);
                if (t == s && (other[static_cast<std::size_t>(t[0])].sign() == other[static_cast<std::size_t>(t[1])].sign()) != same) {
                    p.both_signs = true;
                    break;
                }
            }
        }
    }
    return out;
}

struct OracleFactor {
    Family family = Family::A;
    std::vector<int> coords;
};

std::vector<OracleFactor> oracle_factors(const std::vector<RationalVector>& integral, std::size_t dim)
{
    std::vector<int> all(dim);
    std::iota(all.begin(), all.end(), 0);
    std::vector<OracleFactor> out;
    for (const auto& p : pieces(all, integral, dim)) {
        OracleFactor f;
        f.coords = p.coords;
        if (p.has_single) f.family = p.single_coeff == Rational(1) ? Family::B : Family::C;
        else if (p.both_signs) f.family = Family::D;
        else if (p.coords.size() >= 2) f.family = Family::A;
        else continue; // so(2) or gl(1): abelian, orbit is always zero
        out.push_back(std::move(f));
    }
    return out;
}

Partition oracle_orbit(const OracleFactor& f, const std::vector<RationalVector>& levi, std::size_t dim)
{
    std::vector<int> gl_sizes;
    int z = 0;
    for (const auto& p : pieces(f.coords, levi, dim)) {
        if (p.has_single || p.both_signs) z = static_cast<int>(p.coords.size());
        else gl_sizes.push_back(static_cast<int>(p.coords.size()));
    }
    if (f.family == Family::A) return transpose(Partition::from_unsorted(gl_sizes));
    std::vector<int> columns;
    for (int a : gl_sizes) {
        columns.push_back(a);
        columns.push_back(a);
    }
    columns.push_back(f.family == Family::B ? 2 * z + 1 : 2 * z);
    return collapse(transpose(Partition::from_unsorted(columns)), f.family);
}

std::vector<Partition> oracle_tuple(const RationalVector& v, const std::vector<OracleFactor>& factors,
                                    const std::vector<RationalVector>& integral)
{
    std::vector<RationalVector> levi;
    for (const auto& a : integral)
        if (dot(v, a).is_zero()) levi.push_back(a);
    std::vector<Partition> out;
    for (const auto& f : factors) out.push_back(oracle_orbit(f, levi, v.size()));
    return out;
}

} // namespace

CheckReport brute_force_mild_oracle(const RationalVector& lambda, const LieType& g, const Lattice& lattice)
{
    const auto start = std::chrono::steady_clock::now();
    if (!g.classical()) throw DomainError(ErrorKind::NonClassicalType, g.name() + " is not classical");
    if (g.rank > kOracleMaxRank) throw DomainError(ErrorKind::BoundExceeded, "oracle supports rank <= 5");
    const RootSystem rs = build_root_system(g);
    if (lambda.size() != rs.dim() || lattice.ambient_dim() != rs.dim())
        throw DomainError(ErrorKind::DimensionMismatch, "lambda and lattice must have " + std::to_string(rs.dim()) + " coordinates");
    const Rational radius = dot(lambda, lambda);
    if (radius > Rational(kOracleMaxNormSq)) throw DomainError(ErrorKind::BoundExceeded, "oracle supports |lambda|^2 <= 30");

    std::vector<RationalVector> integral;
    for (const auto& c : rs.coroots)
        if (dot(lambda, c).is_integer()) integral.push_back(c);
    const auto factors = oracle_factors(integral, rs.dim());
    const auto target = oracle_tuple(lambda, factors, integral);

    CheckReport report;
    report.mode = "oracle";
    report.type = g;
    report.lattice = lattice;
    report.lambda = lambda;
    report.norm_sq_lambda = radius;
    report.form_normalization = "euclidean";

    const auto& b = lattice.basis;
    const std::size_t k = b.size();
    const RationalMatrix gram = multiply(b, transpose(b));
    const RationalMatrix ginv = inverse(gram);
    RationalVector h(k);
    for (std::size_t i = 0; i < k; ++i) h[i] = dot(b[i], lambda);
    RationalVector center = multiply(h, ginv);
    std::vector<std::int64_t> lo(k);
    std::vector<std::int64_t> hi(k);
    for (std::size_t i = 0; i < k; ++i) {
        const double c = -center[i].to_double();
        const double w = std::sqrt(radius.to_double() * ginv[i][i].to_double());
        lo[i] = static_cast<std::int64_t>(std::floor(c - w)) - 1;
        hi[i] = static_cast<std::int64_t>(std::ceil(c + w)) + 1;
    }

    std::vector<std::int64_t> c = lo;
    while (true) {
        RationalVector nu = lambda;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < nu.size(); ++j) nu[j] += Rational(c[i]) * b[i][j];
        const Rational norm = dot(nu, nu);
        ++report.candidates;
        if (norm < radius) {
            ++report.points_scanned;
            const auto t = oracle_tuple(nu, factors, integral);
            bool below = true;
            for (std::size_t f = 0; f < t.size() && below; ++f) below = dominates(t[f], target[f]);
            if (below) report.witnesses.push_back(Witness{nu, norm, "induced orbits of nu dominate those of lambda"});
        }
        std::size_t i = 0;
        while (i < k && c[i] == hi[i]) {
            c[i] = lo[i];
            ++i;
        }
        if (i == k) break;
        ++c[i];
    }
    std::sort(report.witnesses.begin(), report.witnesses.end(),
              [](const Witness& x, const Witness& y) { return x.nu < y.nu; });
    report.verdict = report.witnesses.empty() ? Verdict::Pass : Verdict::Fail;
    report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

NormComparisonReport norm_comparison_harness(const LieType& dual_type, const Rational& max_radius_sq, int max_rank)
{
    if (dual_type.family != Family::B && dual_type.family != Family::C && dual_type.family != Family::D)
        throw DomainError(ErrorKind::NonClassicalType, "harness needs a dual algebra of type B, C or D");
    if (dual_type.rank > max_rank) throw DomainError(ErrorKind::BoundExceeded, "harness rank bound exceeded");

    const int n = dual_type.rank;
    const int big_n = dual_type.standard_dim();
    const Factor factor = whole_factor(dual_type.family, n);
    const auto dual_roots = factor_roots(factor, static_cast<std::size_t>(n));

    struct OrbitData {
        Partition d;
        RationalVector half;
        Rational norm;
        RationalVector abs_sorted;
    };
    auto abs_sorted = [](RationalVector v) {
        for (auto& x : v) x = x.abs();
        return sorted_desc(std::move(v));
    };
    std::vector<OrbitData> orbits;
    for (auto& d : family_partitions(big_n, dual_type.family)) {
        OrbitData o;
        o.half = cartan_half(half_h(d));
        o.norm = dot(o.half, o.half);
        o.abs_sorted = abs_sorted(o.half);
        o.d = std::move(d);
        orbits.push_back(std::move(o));
    }

    ChamberBlock block;
    block.kind = dual_type.family == Family::D ? (n >= 2 ? ChamberBlock::Kind::EvenChain : ChamberBlock::Kind::Free)
                                               : ChamberBlock::Kind::SignedChain;
    for (int i = 0; i < n; ++i) {
        block.indices.push_back(i);
        block.signs.push_back(1);
    }
    std::vector<RationalVector> offsets{RationalVector(static_cast<std::size_t>(n), Rational(0))};
    if (dual_type.family != Family::B) offsets.emplace_back(static_cast<std::size_t>(n), Rational(1, 2));

    NormComparisonReport report;
    for (const auto& offset : offsets) {
        const ChamberBall ball(offset, {block}, 1, max_radius_sq, false);
        ball.for_each([&](const RationalVector& nu, const Rational& norm) {
            for (const auto& a : dual_roots)
                if (!dot(nu, a).is_integer()) return true;
            ++report.vectors;
            const Partition induced = induce_zero_factor(centralizer_levi(nu, factor));
            for (const auto& o : orbits) {
                if (!dominates(induced, o.d)) continue;
                ++report.comparisons;
                if (norm < o.norm) {
                    report.ok = false;
                    report.violations.push_back("nu = " + to_string(nu) + " is shorter than h/2 of " + o.d.to_string());
                } else if (norm == o.norm) {
                    ++report.equality_cases;
                    if (abs_sorted(nu) != o.abs_sorted) {
                        report.ok = false;
                        report.violations.push_back("nu = " + to_string(nu) + " has the norm of h/2 of " + o.d.to_string() +
                                                    " without being conjugate to it");
                    }
                }
            }
            return true;
        });
    }
    return report;
}

} // namespace orbitdual
