#include "orbitdual/linalg.hpp"

#include "orbitdual/error.hpp"

#include <utility>

namespace orbitdual {

RationalMatrix identity_matrix(std::size_t n)
{
    RationalMatrix m(n, RationalVector(n));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

RationalMatrix transpose(const RationalMatrix& m)
{
    if (m.empty()) return {};
    RationalMatrix t(m[0].size(), RationalVector(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    return t;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b)
{
    RationalMatrix out;
    out.reserve(a.size());
    for (const auto& row : a) out.push_back(multiply(row, b));
    return out;
}

RationalVector multiply(const RationalVector& v, const RationalMatrix& m)
{
    if (v.size() != m.size()) throw DomainError(ErrorKind::DimensionMismatch, "vector/matrix size mismatch");
    RationalVector out(m.empty() ? 0 : m[0].size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        for (std::size_t j = 0; j < out.size(); ++j)
            if (!m[i][j].is_zero()) out[j] += v[i] * m[i][j];
    }
    return out;
}

RationalMatrix inverse(const RationalMatrix& m)
{
    const std::size_t n = m.size();
    RationalMatrix a = m;
    RationalMatrix inv = identity_matrix(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) throw DomainError(ErrorKind::InvalidLattice, "singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        const Rational p = a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            const Rational f = a[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

std::size_t matrix_rank(RationalMatrix m)
{
    std::size_t rank = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][col].is_zero()) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t r = rank + 1; r < m.size(); ++r) {
            if (m[r][col].is_zero()) continue;
            const Rational f = m[r][col] / m[rank][col];
            for (std::size_t j = col; j < cols; ++j) m[r][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

Rational bilinear(const RationalVector& v, const RationalMatrix& f, const RationalVector& w)
{
    return dot(multiply(v, f), w);
}

} // namespace orbitdual
