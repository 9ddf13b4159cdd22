#pragma once

#include "orbitdual/lattice.hpp"
#include "orbitdual/lie_type.hpp"
#include "orbitdual/rational.hpp"

#include <string>
#include <vector>

namespace orbitdual::cli {

struct Instance {
    std::string label;
    LieType type;
    RationalVector lambda;
    Lattice lattice;
};

/// q-unipotent characters for every partition of N' in 5..9 and every
/// classical g of rank <= 4 with matching N', against the root lattice.
/// Type D with all parts even also contributes the outer variant.
std::vector<Instance> q_unipotent_corpus();

/// Metaplectic characters of every C-partition of 2n, n <= 4, in C_n.
std::vector<Instance> metaplectic_corpus();

/// xi_r(q) for q of n in 2..6 and r in {0, 1/4, 1/2}, plus 50 seeded random
/// r-tuples, in gl(n) coordinates against the integer lattice.
std::vector<Instance> type_a_corpus();

/// rho_s(q) for antisymmetric (q, s) with shifts in {1/4, 1/3} and at least
/// one nonzero shift, ambient rank <= 4, against the root lattice.
std::vector<Instance> antisymmetric_corpus();


} // namespace orbitdual::cli
