#pragma once

#include "orbitdual/lie_type.hpp"
#include "orbitdual/rational.hpp"

#include <vector>

namespace orbitdual {

/// Roots, coroots and invariant form of a simple Lie algebra.
///
/// Classical types live in e_i coordinates with the Euclidean form
/// (A_n uses the n+1 coordinates of gl(n+1)). Exceptional types live in the
/// simple-root basis; the form is the Gram matrix of the simple roots with
/// long roots of norm 2. Positive roots come first, followed by their
/// negatives in the same order.
struct RootSystem {
    LieType type;
    RationalMatrix form;
    std::vector<RationalVector> simple_roots;
    std::vector<RationalVector> roots;
    std::vector<RationalVector> coroots; // 2 alpha / (alpha, alpha)

    [[nodiscard]] std::size_t dim() const { return form.size(); }
    [[nodiscard]] std::size_t positive_count() const { return roots.size() / 2; }
    [[nodiscard]] Rational inner(const RationalVector& a, const RationalVector& b) const;
    [[nodiscard]] Rational norm_sq(const RationalVector& v) const { return inner(v, v); }

    /// Fundamental weights (rows), defined by (omega_i, coroot of alpha_j) = delta_ij
    /// and lying in the span of the simple roots.
    [[nodiscard]] std::vector<RationalVector> fundamental_weights() const;
    [[nodiscard]] RationalVector rho() const;
    /// s_i(v) = v - (v, alpha_i^vee) alpha_i.
    [[nodiscard]] RationalVector simple_reflection(const RationalVector& v, std::size_t i) const;
};

RootSystem build_root_system(const LieType& t);

/// Closed-form root count for the type.
std::size_t expected_root_count(const LieType& t);

/// Number of roots alpha with (v, alpha) = 0.
int n_roots_vanishing(const RationalVector& v, const RootSystem& rs);

/// Converts coordinates with respect to the fundamental weights into the
/// system's ambient coordinates.
RationalVector from_weight_coordinates(const RationalVector& w, const RootSystem& rs);

} // namespace orbitdual
