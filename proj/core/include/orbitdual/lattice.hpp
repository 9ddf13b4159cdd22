#pragma once

#include "orbitdual/lie_type.hpp"
#include "orbitdual/rational.hpp"
#include "orbitdual/root_system.hpp"

#include <string>
#include <string_view>

namespace orbitdual {

/// Lattice spanned by the rows of `basis` (ambient coordinates). Rows are
/// linearly independent but need not span the ambient space (type A root
/// lattice is trace-zero inside gl coordinates).
struct Lattice {
    std::string name;
    RationalMatrix basis;

    [[nodiscard]] std::size_t rank() const { return basis.size(); }
    [[nodiscard]] std::size_t ambient_dim() const { return basis.empty() ? 0 : basis[0].size(); }
};

/// Validates independence and equal row lengths; throws InvalidLattice.
Lattice make_lattice(std::string name, RationalMatrix basis);

/// Presets "root", "integer", "weight". Throws UnsupportedPreset.
Lattice lattice_preset(const LieType& t, std::string_view name);

/// Exact membership test v in L via the normal equations of the basis.
class LatticeMembership {
public:
    explicit LatticeMembership(const Lattice& l);
    [[nodiscard]] bool contains(const RationalVector& v) const;
    /// Integer coefficients of v, or nothing if v is not in L.
    [[nodiscard]] bool coefficients(const RationalVector& v, std::vector<std::int64_t>& out) const;

private:
    RationalMatrix basis_;
    RationalMatrix solve_; // B^T (B B^T)^-1
};

/// True iff every basis vector of `sub` lies in `super`.
bool lattice_contains(const Lattice& super, const Lattice& sub);

/// True iff <b, alpha^vee> is an integer for every basis vector b and coroot.
bool lies_in_weight_lattice(const Lattice& l, const RootSystem& rs);

/// Lattice generated by the simple roots.
Lattice root_lattice(const RootSystem& rs);

/// Least common denominator of all basis entries.
std::int64_t common_denominator(const Lattice& l);

} // namespace orbitdual
