#pragma once

#include "orbitdual/lattice.hpp"
#include "orbitdual/rational.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace orbitdual {

/// Integer range [lo, hi] of k with d (a + k/m - c)^2 <= rem, intersected with
/// [lower, upper] when given. Exact; doubles only seed the search.
struct IntRange {
    std::int64_t lo = 0;
    std::int64_t hi = -1;
    [[nodiscard]] bool empty() const { return lo > hi; }
};

/// Points shift + c B (c integer, B the lattice basis) with
/// (x, x)_F < R (strict) or <= R.
///
/// Fincke-Pohst enumeration on the Gram matrix G = B F B^T with the shift
/// folded into the center c* = -G^-1 B F s. The quadratic is written as
/// sum_i d_i (y_i + sum_{j<i} m_ij y_j)^2 with y = c - c*, so coefficient 0 is
/// the outermost loop and points arrive in lexicographic order of c.
class CosetBall {
public:
    /// Return false to stop the enumeration.
    using Visitor = std::function<bool(std::span<const std::int64_t> coeffs, const Rational& norm_sq)>;

    CosetBall(RationalVector shift, const Lattice& lattice, RationalMatrix form, Rational radius_sq, bool strict);

    /// Returns false iff a visitor stopped early.
    bool for_each(const Visitor& visit) const;
    /// Admissible values of coefficient 0, increasing.
    [[nodiscard]] std::vector<std::int64_t> top_level_values() const;
    /// Enumerates the subtree with coefficient 0 fixed to `top`.
    bool for_each_in_chunk(std::int64_t top, const Visitor& visit) const;

    [[nodiscard]] RationalVector point(std::span<const std::int64_t> coeffs) const;
    [[nodiscard]] std::size_t rank() const { return basis_.size(); }
    [[nodiscard]] const RationalVector& center() const { return center_; }

private:
    bool recurse(std::size_t level, std::vector<std::int64_t>& c, const Rational& used, const Visitor& visit) const;
    [[nodiscard]] IntRange level_range(std::size_t level, const std::vector<std::int64_t>& c, const Rational& used,
                                       Rational& level_center) const;

    RationalVector shift_;
    RationalMatrix basis_;
    Rational radius_sq_;
    bool strict_;
    Rational base_;           // minimum of the quadratic over real coefficients
    RationalVector center_;   // c*
    RationalVector diag_;     // d_i
    RationalMatrix mult_;     // m_ij, j < i
    bool empty_ = false;
};

/// A Weyl-chamber constraint on a group of coordinates.
///   SignedChain:  x_0 >= x_1 >= ... >= x_{k-1} >= 0        (B, C factors)
///   EvenChain:    x_0 >= ... >= x_{k-2} >= |x_{k-1}|        (D factors, k >= 2)
///   Free:         no constraint                             (D factor with k = 1)
///   OrderedChain: s_0 x_0 >= s_1 x_1 >= ... >= s_{k-1} x_{k-1}   (gl factors)
struct ChamberBlock {
    enum class Kind { SignedChain, EvenChain, Free, OrderedChain };
    Kind kind = Kind::OrderedChain;
    std::vector<int> indices;
    std::vector<int> signs;
};

/// Points x on the grid lambda_i + (1/m) Z in the product of chambers with
/// sum x_i^2 < R (strict) or <= R. Every coordinate must belong to exactly one
/// block. Points arrive in lexicographic order of the block-ordered coordinates
/// (values increasing).
class ChamberBall {
public:
    using Visitor = std::function<bool(const RationalVector& x, const Rational& norm_sq)>;

    ChamberBall(RationalVector lambda, std::vector<ChamberBlock> blocks, std::int64_t m, Rational radius_sq, bool strict);

    bool for_each(const Visitor& visit) const;
    [[nodiscard]] std::vector<Rational> top_level_values() const;
    bool for_each_in_chunk(const Rational& top, const Visitor& visit) const;

private:
    struct Slot {
        int coord = 0;
        int sign = 1;          // value enumerated is y = sign * x
        int prev = -1;         // slot bounding y from above, or -1
        bool lower_zero = false; // y >= 0
        bool abs_last = false;   // |y| <= previous y (D chain end)
    };
    bool recurse(std::size_t level, RationalVector& x, const Rational& used, const Visitor& visit) const;
    [[nodiscard]] std::vector<Rational> candidates(std::size_t level, const RationalVector& x, const Rational& used) const;

    RationalVector lambda_;
    std::vector<Slot> slots_;
    std::int64_t m_;
    Rational radius_sq_;
    bool strict_;
    std::vector<Rational> suffix_min_; // lower bound on the norm of slots >= i
};

} // namespace orbitdual
