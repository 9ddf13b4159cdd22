#pragma once

#include "orbitdual/lattice.hpp"
#include "orbitdual/partition.hpp"
#include "orbitdual/rational.hpp"

#include <vector>

namespace orbitdual::testing {

/// Every point shift + cB with (x, x)_F below (or up to) R, found by scanning
/// a coefficient box around the real minimizer. Sorted lexicographically.
std::vector<RationalVector> box_scan_points(const RationalVector& shift, const Lattice& lattice,
                                            const RationalMatrix& form, const Rational& radius_sq, bool strict);

struct XiBrute {
    Rational min_norm_sq;
    std::vector<RationalVector> minimizers; // sorted decreasing vectors, in lexicographic order
};

/// Scans all decreasing vectors with coordinates in r + Z, |x| <= |q|/2 + 2,
/// whose value multiplicities are the columns of q. The box is safe: any
/// value outside it can move to a free slot nearer zero, lowering the norm.
XiBrute xi_brute_force(const Partition& q, const Rational& r);

} // namespace orbitdual::testing
