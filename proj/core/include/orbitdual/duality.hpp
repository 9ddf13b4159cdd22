#pragma once

#include "orbitdual/partition.hpp"

#include <string_view>

namespace orbitdual {

/// The four order-preserving bijections between special classes.
/// Each map checks its domain and throws DomainViolation unless `checked` is false.
///
///   f_BC : P_{0,1}(2n+1) -> P_{1,0}(2n),   d -> (d-)_C
///   f_CB : P_{1,0}(2n)   -> P_{0,1}(2n+1), d -> (d+)_B
///   f_DC : P_{0,0}(2n)   -> P_{1,1}(2n),   d -> ((d+)-)_C
///   f_CD : P_{1,1}(2n)   -> P_{0,0}(2n),   d -> d_D
Partition f_BC(const Partition& d, bool checked = true);
Partition f_CB(const Partition& d, bool checked = true);
Partition f_DC(const Partition& d, bool checked = true);
Partition f_CD(const Partition& d, bool checked = true);

/// Lusztig-Spaltenstein duality: X-collapse of the transpose (plain transpose for A).
/// Checked mode requires d to be special for X: P_{0,1} for B, P_{1,0} for C, P_{0,0} for D.
Partition d_LS(const Partition& d, Family x, bool checked = true);

/// Barbasch-Vogan duality f o d_LS for a partition living on side x:
/// B -> C via f_BC, C -> B via f_CB, D -> C via f_DC, A -> transpose.
Partition d_BV(const Partition& d, Family x, bool checked = true);

/// Membership test for the special class attached to X (the domain of d_LS).
bool is_special_for(const Partition& d, Family x);

enum class DualityMap { FBC, FCB, FDC, FCD, LS, BV };
DualityMap parse_duality_map(std::string_view name);
std::string_view to_string(DualityMap m);

} // namespace orbitdual
