#pragma once

#include "orbitdual/lie_type.hpp"
#include "orbitdual/rational.hpp"

#include <string>
#include <vector>

namespace orbitdual {

/// A simple-or-gl factor of a pseudo-Levi subalgebra of the dual algebra,
/// acting on a subset of the e_i coordinates.
///
/// Family A is a gl block whose roots are s_i e_i - s_j e_j (s = signs).
/// Families B, C, D carry the roots of so(2k+1), sp(2k), so(2k) on the indices;
/// their signs are all +1.
struct Factor {
    Family family = Family::A;
    std::vector<int> indices;
    std::vector<int> signs;
    std::string label;

    [[nodiscard]] int rank() const { return static_cast<int>(indices.size()); }
    /// Matrix size of the standard representation: k, 2k+1, 2k, 2k.
    [[nodiscard]] int standard_dim() const;
    /// e.g. "so(10)", "sp(4)", "gl(3)".
    [[nodiscard]] std::string name() const;

    friend bool operator==(const Factor& a, const Factor& b)
    {
        return a.family == b.family && a.indices == b.indices && a.signs == b.signs;
    }
};

/// The whole classical algebra of the given family on coordinates 0..k-1.
Factor whole_factor(Family family, int k);

struct GlBlock {
    std::vector<int> indices;
    std::vector<int> signs; // signs[i] * v[indices[i]] == value
    Rational value;
    [[nodiscard]] int size() const { return static_cast<int>(indices.size()); }
};

/// Centralizer of a vector inside one factor: gl blocks plus, for B/C/D
/// factors, the residual block on the zero coordinates.
/// Invariant: block sizes + residual coordinate count = factor rank.
struct LeviDecomposition {
    Factor factor;
    std::vector<GlBlock> blocks;
    std::vector<int> residual; // zero coordinates (B/C/D factors only)

    [[nodiscard]] int residual_size() const { return static_cast<int>(residual.size()); }
    [[nodiscard]] std::vector<int> block_sizes() const;
    /// e.g. "gl(2)+gl(2)+so(2)".
    [[nodiscard]] std::string name() const;
};

/// Groups the factor's coordinates of v: by |v_i| for B/C/D (zeros form the
/// residual), by signs[i] * v_i for gl factors. Blocks are ordered by
/// decreasing value.
LeviDecomposition centralizer_levi(const RationalVector& v, const Factor& factor);

/// Factors of the dual of the integral root system {alpha : <lambda, alpha^vee> in Z}
/// of the classical algebra g. Order: integer class, half-integer class, then gl
/// factors for classes +-t + Z with 0 < t < 1/2 by increasing t. For type A the
/// classes are x mod 1, ordered by the representative in [0, 1). Empty classes
/// produce no factor.
std::vector<Factor> integral_pseudo_levi(const RationalVector& lambda, const LieType& g);

/// Roots of the factor in the dual algebra, in ambient coordinates of length dim.
std::vector<RationalVector> factor_roots(const Factor& f, std::size_t dim);
/// Roots of the Levi subalgebra, in ambient coordinates of length dim.
std::vector<RationalVector> levi_roots(const LeviDecomposition& l, std::size_t dim);

/// Family of the standard coroot system of g (B <-> C swapped, A and D fixed).
Family dual_family(Family g);

} // namespace orbitdual
