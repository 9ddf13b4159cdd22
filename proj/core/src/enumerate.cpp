#include "orbitdual/enumerate.hpp"

#include "orbitdual/error.hpp"
#include "orbitdual/linalg.hpp"

#include <cmath>

namespace orbitdual {
namespace {

/// Integers k with d (a + k step - c)^2 <= rem and lower <= a + k step <= upper.
IntRange quad_range(const Rational& a, const Rational& step, const Rational& c, const Rational& d, const Rational& rem,
                    const Rational* lower, const Rational* upper)
{
    IntRange out;
    if (rem < 0) return out;
    auto ok = [&](std::int64_t k) {
        const Rational t = a + step * Rational(k) - c;
        return d * t * t <= rem;
    };
    const double kc = ((c - a) / step).to_double();
    const double w = std::sqrt((rem / d).to_double()) / step.to_double();
    std::int64_t lo = static_cast<std::int64_t>(std::ceil(kc - w));
    std::int64_t hi = static_cast<std::int64_t>(std::floor(kc + w));
    while (ok(lo - 1)) --lo;
    while (lo <= hi && !ok(lo)) ++lo;
    while (ok(hi + 1)) ++hi;
    while (hi >= lo && !ok(hi)) --hi;
    if (lower) lo = std::max(lo, ((*lower - a) / step).ceil());
    if (upper) hi = std::min(hi, ((*upper - a) / step).floor());
    out.lo = lo;
    out.hi = hi;
    return out;
}

} // namespace

CosetBall::CosetBall(RationalVector shift, const Lattice& lattice, RationalMatrix form, Rational radius_sq, bool strict)
    : shift_(std::move(shift)), basis_(lattice.basis), radius_sq_(radius_sq), strict_(strict)
{
    if (radius_sq_ < 0) throw DomainError(ErrorKind::UnboundedBall, "radius squared must be nonnegative");
    if (shift_.size() != lattice.ambient_dim() || form.size() != shift_.size())
        throw DomainError(ErrorKind::DimensionMismatch, "shift, lattice and form dimensions disagree");
    const std::size_t k = basis_.size();
    const RationalMatrix bf = multiply(basis_, form);
    const RationalMatrix gram = multiply(bf, transpose(basis_));
    RationalVector h(k);
    for (std::size_t i = 0; i < k; ++i) h[i] = dot(bf[i], shift_);
    const RationalMatrix ginv = inverse(gram);
    center_ = multiply(h, ginv);
    for (auto& x : center_) x = -x;
    base_ = bilinear(shift_, form, shift_) + dot(center_, h);

    RationalMatrix a = gram;
    diag_.assign(k, Rational(0));
    mult_.assign(k, RationalVector(k));
    for (std::size_t ii = k; ii-- > 0;) {
        diag_[ii] = a[ii][ii];
        for (std::size_t j = 0; j < ii; ++j) mult_[ii][j] = a[ii][j] / diag_[ii];
        for (std::size_t j = 0; j < ii; ++j)
            for (std::size_t l = 0; l < ii; ++l) a[j][l] -= diag_[ii] * mult_[ii][j] * mult_[ii][l];
    }
    empty_ = strict_ ? !(base_ < radius_sq_) : !(base_ <= radius_sq_);
}

IntRange CosetBall::level_range(std::size_t level, const std::vector<std::int64_t>& c, const Rational& used,
                                Rational& level_center) const
{
    level_center = center_[level];
    for (std::size_t j = 0; j < level; ++j)
        if (!mult_[level][j].is_zero()) level_center -= mult_[level][j] * (Rational(c[j]) - center_[j]);
    return quad_range(0, 1, level_center, diag_[level], radius_sq_ - base_ - used, nullptr, nullptr);
}

bool CosetBall::recurse(std::size_t level, std::vector<std::int64_t>& c, const Rational& used, const Visitor& visit) const
{
    if (level == c.size()) {
        const Rational norm = base_ + used;
        if (strict_ ? norm < radius_sq_ : norm <= radius_sq_) return visit(c, norm);
        return true;
    }
    Rational ctr;
    const IntRange r = level_range(level, c, used, ctr);
    for (std::int64_t v = r.lo; v <= r.hi; ++v) {
        c[level] = v;
        const Rational t = Rational(v) - ctr;
        if (!recurse(level + 1, c, used + diag_[level] * t * t, visit)) return false;
    }
    return true;
}

bool CosetBall::for_each(const Visitor& visit) const
{
    if (empty_) return true;
    std::vector<std::int64_t> c(basis_.size());
    if (c.empty()) return visit(c, base_);
    return recurse(0, c, 0, visit);
}

std::vector<std::int64_t> CosetBall::top_level_values() const
{
    std::vector<std::int64_t> out;
    if (empty_ || basis_.empty()) return out;
    std::vector<std::int64_t> c(basis_.size());
    Rational ctr;
    const IntRange r = level_range(0, c, 0, ctr);
    for (std::int64_t v = r.lo; v <= r.hi; ++v) out.push_back(v);
    return out;
}

bool CosetBall::for_each_in_chunk(std::int64_t top, const Visitor& visit) const
{
    if (empty_ || basis_.empty()) return true;
    std::vector<std::int64_t> c(basis_.size());
    c[0] = top;
    const Rational t = Rational(top) - center_[0];
    return recurse(1, c, diag_[0] * t * t, visit);
}

RationalVector CosetBall::point(std::span<const std::int64_t> coeffs) const
{
    RationalVector x = shift_;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        const Rational ci(coeffs[i]);
        for (std::size_t j = 0; j < x.size(); ++j)
            if (!basis_[i][j].is_zero()) x[j] += ci * basis_[i][j];
    }
    return x;
}

ChamberBall::ChamberBall(RationalVector lambda, std::vector<ChamberBlock> blocks, std::int64_t m, Rational radius_sq,
                         bool strict)
    : lambda_(std::move(lambda)), m_(m), radius_sq_(radius_sq), strict_(strict)
{
    if (radius_sq_ < 0) throw DomainError(ErrorKind::UnboundedBall, "radius squared must be nonnegative");
    if (m_ <= 0) throw DomainError(ErrorKind::InvalidLattice, "grid denominator must be positive");
    std::vector<int> seen(lambda_.size(), 0);
    for (const auto& b : blocks) {
        const std::size_t first = slots_.size();
        const std::size_t k = b.indices.size();
        for (std::size_t j = 0; j < k; ++j) {
            Slot s;
            s.coord = b.indices[j];
            if (s.coord < 0 || static_cast<std::size_t>(s.coord) >= lambda_.size())
                throw DomainError(ErrorKind::DimensionMismatch, "chamber block index out of range");
            ++seen[static_cast<std::size_t>(s.coord)];
            s.prev = j == 0 ? -1 : static_cast<int>(first + j - 1);
            switch (b.kind) {
            case ChamberBlock::Kind::SignedChain: s.lower_zero = true; break;
            case ChamberBlock::Kind::EvenChain:
                if (j + 1 == k) s.abs_last = true;
                else s.lower_zero = true;
                break;
            case ChamberBlock::Kind::Free: s.prev = -1; break;
            case ChamberBlock::Kind::OrderedChain: s.sign = b.signs.at(j); break;
            }
            slots_.push_back(s);
        }
    }
    for (int cnt : seen)
        if (cnt != 1) throw DomainError(ErrorKind::DimensionMismatch, "chamber blocks must cover each coordinate once");

    const Rational step(1, m_);
    suffix_min_.assign(slots_.size() + 1, Rational(0));
    for (std::size_t i = slots_.size(); i-- > 0;) {
        const Rational a = slots_[i].sign > 0 ? lambda_[static_cast<std::size_t>(slots_[i].coord)]
                                              : -lambda_[static_cast<std::size_t>(slots_[i].coord)];
        const Rational f = (a * Rational(m_)).frac() / Rational(m_); // smallest nonnegative grid value
        const Rational low = slots_[i].lower_zero ? f : std::min(f, step - f);
        suffix_min_[i] = suffix_min_[i + 1] + low * low;
    }
}

std::vector<Rational> ChamberBall::candidates(std::size_t level, const RationalVector& x, const Rational& used) const
{
    const Slot& s = slots_[level];
    const Rational a = s.sign > 0 ? lambda_[static_cast<std::size_t>(s.coord)] : -lambda_[static_cast<std::size_t>(s.coord)];
    const Rational step(1, m_);
    Rational lower_v;
    Rational upper_v;
    const Rational* lower = nullptr;
    const Rational* upper = nullptr;
    if (s.prev >= 0) {
        const Slot& p = slots_[static_cast<std::size_t>(s.prev)];
        upper_v = p.sign > 0 ? x[static_cast<std::size_t>(p.coord)] : -x[static_cast<std::size_t>(p.coord)];
        upper = &upper_v;
        if (s.abs_last) {
            lower_v = -upper_v;
            lower = &lower_v;
        }
    }
    if (s.lower_zero) {
        lower_v = 0;
        lower = &lower_v;
    }
    const IntRange r = quad_range(a, step, 0, 1, radius_sq_ - used - suffix_min_[level + 1], lower, upper);
    std::vector<Rational> out;
    for (std::int64_t k = r.lo; k <= r.hi; ++k) out.push_back(a + step * Rational(k));
    return out;
}

bool ChamberBall::recurse(std::size_t level, RationalVector& x, const Rational& used, const Visitor& visit) const
{
    if (level == slots_.size()) {
        if (strict_ ? used < radius_sq_ : used <= radius_sq_) return visit(x, used);
        return true;
    }
    const Slot& s = slots_[level];
    for (const Rational& y : candidates(level, x, used)) {
        x[static_cast<std::size_t>(s.coord)] = s.sign > 0 ? y : -y;
        if (!recurse(level + 1, x, used + y * y, visit)) return false;
    }
    return true;
}

bool ChamberBall::for_each(const Visitor& visit) const
{
    RationalVector x(lambda_.size());
    return recurse(0, x, 0, visit);
}

std::vector<Rational> ChamberBall::top_level_values() const
{
    if (slots_.empty()) return {};
    RationalVector x(lambda_.size());
    return candidates(0, x, 0);
}

bool ChamberBall::for_each_in_chunk(const Rational& top, const Visitor& visit) const
{
    if (slots_.empty()) return true;
    RationalVector x(lambda_.size());
    const Slot& s = slots_[0];
    x[static_cast<std::size_t>(s.coord)] = s.sign > 0 ? top : -top;
    return recurse(1, x, top * top, visit);
}

} // namespace orbitdual
