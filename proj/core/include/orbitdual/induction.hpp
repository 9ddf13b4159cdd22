#pragma once

#include "orbitdual/levi.hpp"
#include "orbitdual/partition.hpp"

#include <string_view>
#include <utility>
#include <vector>

namespace orbitdual {

/// Ind from gl(a_1) x ... x gl(a_k) x g(residual) to g of the zero orbit.
///
/// Family A: transpose of the sorted block sizes (residual must be 0).
/// B/C/D: start from the zero orbit [1^{2z+1}] / [1^{2z}] / [1^{2z}] of the
/// residual, then for each block a add 2 to the first a parts (zero padded)
/// and take the ambient collapse.
Partition induce_staged(Family ambient, const std::vector<int>& gl_blocks, int residual_coords);

/// Richardson orbit of the factor induced from its Levi subalgebra.
Partition induce_zero_factor(const LeviDecomposition& levi);

/// Labeled per-factor orbits; factors are never permuted.
struct OrbitTuple {
    std::vector<std::pair<Factor, Partition>> entries;
    friend bool operator==(const OrbitTuple&, const OrbitTuple&) = default;
};

OrbitTuple induce_zero(const std::vector<LeviDecomposition>& levis);

/// induce_zero over the centralizers of v in each factor.
OrbitTuple induced_tuple(const RationalVector& v, const std::vector<Factor>& factors);

/// Closure order factor by factor: a[i] dominated by b[i] for every i.
/// Throws FactorMismatch when the labeled factor lists differ.
bool orbit_tuple_leq(const OrbitTuple& a, const OrbitTuple& b);

/// Dimension of the nilpotent orbit with partition d in gl(|d|) (A),
/// so(|d|) (B, D) or sp(|d|) (C).
long long orbit_dimension(const Partition& d, Family family);

/// Positive roots of the factor and of the Levi subalgebra.
long long positive_roots(Family family, int rank);
long long levi_positive_roots(const LeviDecomposition& levi);

/// Parsed Levi shape "gl2,gl2,res2": gl block sizes and the residual's matrix size.
struct LeviShape {
    std::vector<int> gl_blocks;
    int residual_matrix_size = 0;
};

/// Validates the shape against the ambient type; throws InvalidDecomposition.
/// Returns the residual coordinate count.
int residual_coordinates(const LeviShape& shape, const LieType& ambient);
LeviShape parse_levi_shape(std::string_view text);

} // namespace orbitdual
