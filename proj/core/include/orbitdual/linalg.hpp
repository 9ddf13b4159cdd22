#pragma once

#include "orbitdual/rational.hpp"

namespace orbitdual {

/// Exact dense linear algebra over Rational. Sizes are small (rank <= ~20).

RationalMatrix identity_matrix(std::size_t n);
RationalMatrix transpose(const RationalMatrix& m);
RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);
/// Row vector times matrix.
RationalVector multiply(const RationalVector& v, const RationalMatrix& m);
/// Throws DomainError(InvalidLattice) if m is singular.
RationalMatrix inverse(const RationalMatrix& m);
std::size_t matrix_rank(RationalMatrix m);
/// v^T F w.
Rational bilinear(const RationalVector& v, const RationalMatrix& f, const RationalVector& w);

} // namespace orbitdual
