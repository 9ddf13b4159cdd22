#include "orbitdual/root_system.hpp"

#include "orbitdual/error.hpp"
#include "orbitdual/linalg.hpp"

#include <algorithm>
#include <set>

namespace orbitdual {
namespace {

RationalVector unit(std::size_t dim, std::size_t i, Rational scale = 1)
{
    RationalVector v(dim);
    v[i] = scale;
    return v;
}

RationalVector combo(std::size_t dim, std::size_t i, Rational a, std::size_t j, Rational b)
{
    RationalVector v(dim);
    v[i] += a;
    v[j] += b;
    return v;
}

RationalVector negate(RationalVector v)
{
    for (auto& x : v) x = -x;
    return v;
}

void classical_positive_roots(const LieType& t, RootSystem& rs)
{
    const auto n = static_cast<std::size_t>(t.rank);
    const std::size_t dim = t.family == Family::A ? n + 1 : n;
    rs.form = identity_matrix(dim);
    std::vector<RationalVector> pos;
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j) {
            pos.push_back(combo(dim, i, 1, j, -1));
            if (t.family != Family::A) pos.push_back(combo(dim, i, 1, j, 1));
        }
    if (t.family == Family::B)
        for (std::size_t i = 0; i < n; ++i) pos.push_back(unit(dim, i));
    if (t.family == Family::C)
        for (std::size_t i = 0; i < n; ++i) pos.push_back(unit(dim, i, 2));

    for (std::size_t i = 0; i + 1 < dim; ++i) {
        if (t.family == Family::A || i + 1 < n) rs.simple_roots.push_back(combo(dim, i, 1, i + 1, -1));
    }
    if (t.family != Family::A) {
        switch (t.family) {
        case Family::B: rs.simple_roots.push_back(unit(dim, n - 1)); break;
        case Family::C: rs.simple_roots.push_back(unit(dim, n - 1, 2)); break;
        case Family::D: rs.simple_roots.push_back(combo(dim, n - 2, 1, n - 1, 1)); break;
        default: break;
        }
    }
    rs.roots = std::move(pos);
}

RationalMatrix cartan_gram(const std::vector<std::pair<int, int>>& edges, int rank)
{
    RationalMatrix g(static_cast<std::size_t>(rank), RationalVector(static_cast<std::size_t>(rank)));
    for (int i = 0; i < rank; ++i) g[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
    for (auto [a, b] : edges) {
        g[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] = -1;
        g[static_cast<std::size_t>(b - 1)][static_cast<std::size_t>(a - 1)] = -1;
    }
    return g;
}

RationalMatrix exceptional_gram(const LieType& t)
{
    switch (t.family) {
    case Family::G:
        return {{Rational(2, 3), -1}, {-1, 2}};
    case Family::F:
        return {{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -1, 1, Rational(-1, 2)}, {0, 0, Rational(-1, 2), 1}};
    case Family::E: {
        // Bourbaki labels: chain 1-3-4-5-...-rank with node 2 attached to 4.
        std::vector<std::pair<int, int>> edges{{1, 3}, {3, 4}, {2, 4}};
        for (int k = 4; k < t.rank; ++k) edges.emplace_back(k, k + 1);
        return cartan_gram(edges, t.rank);
    }
    default: break;
    }
    throw DomainError(ErrorKind::InvalidType, t.name() + " is not exceptional");
}

void exceptional_positive_roots(const LieType& t, RootSystem& rs)
{
    rs.form = exceptional_gram(t);
    const std::size_t r = rs.form.size();
    for (std::size_t i = 0; i < r; ++i) rs.simple_roots.push_back(unit(r, i));

    // Grow positive roots by height; the alpha_i-string through beta runs
    // from beta - p alpha_i to beta + q alpha_i with p - q = <beta, alpha_i^vee>.
    std::set<RationalVector> known(rs.simple_roots.begin(), rs.simple_roots.end());
    std::vector<RationalVector> layer = rs.simple_roots;
    std::vector<RationalVector> pos = rs.simple_roots;
    while (!layer.empty()) {
        std::vector<RationalVector> next;
        for (const auto& beta : layer) {
            for (std::size_t i = 0; i < r; ++i) {
                const Rational pairing = 2 * bilinear(beta, rs.form, rs.simple_roots[i]) / rs.form[i][i];
                int p = 0;
                RationalVector down = beta;
                while (true) {
                    down[i] -= 1;
                    if (!known.contains(down)) break;
                    ++p;
                }
                const Rational q = Rational(p) - pairing;
                if (q > 0) {
                    RationalVector up = beta;
                    up[i] += 1;
                    if (known.insert(up).second) next.push_back(up);
                }
            }
        }
        std::sort(next.begin(), next.end());
        pos.insert(pos.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    rs.roots = std::move(pos);
}

} // namespace

Rational RootSystem::inner(const RationalVector& a, const RationalVector& b) const
{
    if (a.size() != dim() || b.size() != dim())
        throw DomainError(ErrorKind::DimensionMismatch,
                          "vector length " + std::to_string(a.size()) + " does not match " + type.name());
    if (type.classical()) return dot(a, b);
    return bilinear(a, form, b);
}

std::vector<RationalVector> RootSystem::fundamental_weights() const
{
    const std::size_t r = simple_roots.size();
    RationalMatrix pairing(r, RationalVector(r));
    for (std::size_t k = 0; k < r; ++k)
        for (std::size_t j = 0; j < r; ++j)
            pairing[k][j] = 2 * inner(simple_roots[k], simple_roots[j]) / norm_sq(simple_roots[j]);
    const RationalMatrix w = inverse(pairing);
    std::vector<RationalVector> out;
    for (std::size_t i = 0; i < r; ++i) out.push_back(multiply(w[i], simple_roots));
    return out;
}

RationalVector RootSystem::rho() const
{
    RationalVector sum(dim());
    for (std::size_t k = 0; k < positive_count(); ++k)
        for (std::size_t j = 0; j < dim(); ++j) sum[j] += roots[k][j];
    for (auto& x : sum) x /= 2;
    return sum;
}

RationalVector RootSystem::simple_reflection(const RationalVector& v, std::size_t i) const
{
    const auto& a = simple_roots.at(i);
    const Rational c = 2 * inner(v, a) / norm_sq(a);
    RationalVector out = v;
    for (std::size_t j = 0; j < out.size(); ++j) out[j] -= c * a[j];
    return out;
}

RootSystem build_root_system(const LieType& t)
{
    RootSystem rs;
    rs.type = t;
    if (t.classical())
        classical_positive_roots(t, rs);
    else
        exceptional_positive_roots(t, rs);

    const std::size_t npos = rs.roots.size();
    for (std::size_t k = 0; k < npos; ++k) rs.roots.push_back(negate(rs.roots[k]));
    for (const auto& a : rs.roots) {
        const Rational nn = rs.norm_sq(a);
        RationalVector c = a;
        for (auto& x : c) x = 2 * x / nn;
        rs.coroots.push_back(std::move(c));
    }
    return rs;
}

std::size_t expected_root_count(const LieType& t)
{
    const auto n = static_cast<std::size_t>(t.rank);
    switch (t.family) {
    case Family::A: return n * (n + 1);
    case Family::B: case Family::C: return 2 * n * n;
    case Family::D: return 2 * n * (n - 1);
    case Family::G: return 12;
    case Family::F: return 48;
    case Family::E: return n == 6 ? 72 : n == 7 ? 126 : 240;
    }
    return 0;
}

int n_roots_vanishing(const RationalVector& v, const RootSystem& rs)
{
    int count = 0;
    for (const auto& a : rs.roots)
        if (rs.inner(v, a).is_zero()) ++count;
    return count;
}

RationalVector from_weight_coordinates(const RationalVector& w, const RootSystem& rs)
{
    const auto fw = rs.fundamental_weights();
    if (w.size() != fw.size())
        throw DomainError(ErrorKind::DimensionMismatch, "expected " + std::to_string(fw.size()) + " weight coordinates");
    return multiply(w, fw);
}

} // namespace orbitdual
