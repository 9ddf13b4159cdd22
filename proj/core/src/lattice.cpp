#include "orbitdual/lattice.hpp"

#include "orbitdual/error.hpp"
#include "orbitdual/linalg.hpp"

#include <numeric>

namespace orbitdual {

Lattice make_lattice(std::string name, RationalMatrix basis)
{
    if (basis.empty()) throw DomainError(ErrorKind::InvalidLattice, "lattice basis is empty");
    const std::size_t d = basis[0].size();
    for (const auto& row : basis)
        if (row.size() != d || d == 0) throw DomainError(ErrorKind::InvalidLattice, "lattice rows have unequal length");
    if (matrix_rank(basis) != basis.size())
        throw DomainError(ErrorKind::InvalidLattice, "lattice basis rows are linearly dependent");
    return Lattice{std::move(name), std::move(basis)};
}

Lattice root_lattice(const RootSystem& rs) { return make_lattice("root", rs.simple_roots); }

Lattice lattice_preset(const LieType& t, std::string_view name)
{
    const RootSystem rs = build_root_system(t);
    if (name == "root") {
        if (t.exceptional()) return make_lattice("root", identity_matrix(rs.dim()));
        return root_lattice(rs);
    }
    if (name == "integer") {
        if (t.exceptional())
            throw DomainError(ErrorKind::UnsupportedPreset, "integer preset needs e_i coordinates; " + t.name() + " uses the root basis");
        return make_lattice("integer", identity_matrix(rs.dim()));
    }
    if (name == "weight") {
        if (t.family == Family::A)
            throw DomainError(ErrorKind::UnsupportedPreset, "weight preset is not defined for gl coordinates; use integer");
        if (t.family == Family::C) return make_lattice("weight", identity_matrix(rs.dim()));
        if (t.classical()) {
            const auto n = static_cast<std::size_t>(t.rank);
            RationalMatrix b = identity_matrix(n);
            b[n - 1] = RationalVector(n, Rational(1, 2));
            return make_lattice("weight", std::move(b));
        }
        return make_lattice("weight", rs.fundamental_weights());
    }
    throw DomainError(ErrorKind::UnsupportedPreset, "unknown lattice preset '" + std::string(name) + "'");
}

LatticeMembership::LatticeMembership(const Lattice& l) : basis_(l.basis)
{
    const RationalMatrix bt = transpose(basis_);
    solve_ = multiply(bt, inverse(multiply(basis_, bt)));
}

bool LatticeMembership::coefficients(const RationalVector& v, std::vector<std::int64_t>& out) const
{
    const RationalVector c = multiply(v, solve_);
    out.assign(c.size(), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!c[i].is_integer()) return false;
        out[i] = c[i].num();
    }
    RationalVector back(v.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) back[j] += c[i] * basis_[i][j];
    return back == v;
}

bool LatticeMembership::contains(const RationalVector& v) const
{
    std::vector<std::int64_t> scratch;
    return coefficients(v, scratch);
}

bool lattice_contains(const Lattice& super, const Lattice& sub)
{
    if (super.ambient_dim() != sub.ambient_dim()) return false;
    const LatticeMembership m(super);
    for (const auto& row : sub.basis)
        if (!m.contains(row)) return false;
    return true;
}

bool lies_in_weight_lattice(const Lattice& l, const RootSystem& rs)
{
    for (const auto& b : l.basis)
        for (const auto& c : rs.coroots)
            if (!rs.inner(b, c).is_integer()) return false;
    return true;
}

std::int64_t common_denominator(const Lattice& l)
{
    std::int64_t m = 1;
    for (const auto& row : l.basis)
        for (const auto& x : row) m = std::lcm(m, x.den());
    return m;
}

} // namespace orbitdual
