#pragma once

#include "orbitdual/lie_type.hpp"
#include "orbitdual/partition.hpp"
#include "orbitdual/rational.hpp"

#include <string_view>
#include <utility>
#include <vector>

namespace orbitdual {

/// Multisets are returned sorted in decreasing order.

/// Union over parts of ((d_i - 1)/2, (d_i - 3)/2, ..., (1 - d_i)/2).
RationalVector half_h(const Partition& d);

/// Positive members of each row string, in row order, padded with zeros to
/// floor(N/2). Rows need not be sorted. Throws SizeMismatch if sum != N.
RationalVector rho_plus(const std::vector<int>& rows, int n);

enum class QVariant { Default, Outer };
QVariant parse_variant(std::string_view s);

/// Size N' of the sl(N') into which the dual algebra of g embeds:
/// 2n+1 for B_n and C_n, 2n for D_n, n+1 for A_n.
int q_unipotent_size(const LieType& g);

/// Dominant representative of the q-unipotent character for g. Outer negates
/// the last coordinate; legal only for D with all parts even (InvalidVariant).
/// For type A this is half_h(q).
RationalVector q_unipotent_infchar(const Partition& q, const LieType& g, QVariant variant = QVariant::Default);

/// Row form: for each row, r + sigma k for k in [-floor(q_i/2), floor((q_i-1)/2)],
/// sigma = (-1)^floor(r). Requires -1/2 < r <= 1/2 (RangeViolation).
RationalVector xi_r(const Partition& q, const Rational& r);
/// Column form: value r + (-1)^(j-1+floor(r)) floor(j/2) with multiplicity c_j of q^t.
RationalVector xi_r_columns(const Partition& q, const Rational& r);

/// Every minimal-norm vector (sorted decreasing, listed in increasing
/// lexicographic order) with coordinates in r + Z whose value multiplicities
/// are the columns of q. For r = 0 (r = 1/2) these arise from xi_r(q) by
/// negating the row strings of some even (odd) rows, subject to the column
/// condition; otherwise xi_r(q) is the only one.
std::vector<RationalVector> xi_minimizers(const Partition& q, const Rational& r);
/// Concatenation of xi_{r_i}([q_i]). Throws LengthMismatch, RangeViolation.
RationalVector xi_rvec(const std::vector<int>& rows, const RationalVector& r);

/// Concatenation of ((q_i-1)/2 + s_i, ..., (1-q_i)/2 + s_i), |s_i| < 1/2.
RationalVector rho_s(const std::vector<int>& rows, const RationalVector& s);

/// r_i = s_i for odd rows and s_i - (-1)^floor(s_i)/2 for even rows, with the
/// value -1/2 replaced by 1/2 so that r_i stays in (-1/2, 1/2].
RationalVector translate_shift(const std::vector<int>& rows, const RationalVector& s);

struct AntisymmetricGrouping {
    Partition zero_block;                            // rows with shift 0
    std::vector<std::pair<Partition, Rational>> pairs; // (p_i, t_i), t_i > 0 increasing
};

/// True iff, for each t > 0, the rows with shift t and with shift -t form the
/// same multiset. Fills the grouping on success.
bool is_antisymmetric(const std::vector<int>& rows, const RationalVector& s, AntisymmetricGrouping* grouping = nullptr);

/// Cartan coordinates (sorted decreasing, nonnegative) of a +-symmetric multiset
/// of size N: the positive members plus half of the zeros (one zero dropped when
/// N is odd). Throws DomainViolation if the multiset is not symmetric.
RationalVector cartan_half(const RationalVector& multiset);

/// q-unipotent character of q + [1] for g = C_n where q is a C-partition of 2n.
/// Cross-checked against cartan_half(half_h(q)).
RationalVector metaplectic_infchar(const Partition& q);

/// Sorted decreasing copy.
RationalVector sorted_desc(RationalVector v);

} // namespace orbitdual
