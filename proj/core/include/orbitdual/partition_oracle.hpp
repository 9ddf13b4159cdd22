#pragma once

#include "orbitdual/partition.hpp"

namespace orbitdual {

inline constexpr int kDefaultOracleBound = 20;

/// Dominance maximum of {p in P_X(|d|) : p dominated by d}, found by listing
/// every partition of |d|. Independent of collapse(); used to certify it.
/// Throws BoundExceeded when |d| > bound and NoMaximum if no unique maximum exists.
Partition brute_collapse_oracle(const Partition& d, Family x, int bound = kDefaultOracleBound);

} // namespace orbitdual
