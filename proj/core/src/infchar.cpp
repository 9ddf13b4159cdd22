#include "orbitdual/infchar.hpp"

#include "orbitdual/error.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>

namespace orbitdual {
namespace {

const Rational kHalf(1, 2);

void require_r(const Rational& r)
{
    if (!(r > -kHalf && r <= kHalf))
        throw DomainError(ErrorKind::RangeViolation, "r = " + r.to_string() + " is outside (-1/2, 1/2]");
}

void append_row_string(int q, const Rational& shift, RationalVector& out)
{
    for (int k = q - 1; k >= 1 - q; k -= 2) out.push_back(Rational(k, 2) + shift);
}

void append_xi_row(int q, const Rational& r, RationalVector& out)
{
    const int sigma = r.floor() < 0 ? -1 : 1;
    for (int k = -(q / 2); k <= (q - 1) / 2; ++k) out.push_back(r + Rational(sigma * k));
}

void require_rows(const std::vector<int>& rows)
{
    if (std::any_of(rows.begin(), rows.end(), [](int q) { return q <= 0; }))
        throw DomainError(ErrorKind::InvalidPartition, "rows must be positive");
}

} // namespace

RationalVector sorted_desc(RationalVector v)
{
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
}

RationalVector half_h(const Partition& d)
{
    RationalVector out;
    for (int q : d.parts()) append_row_string(q, 0, out);
    return sorted_desc(std::move(out));
}

RationalVector rho_plus(const std::vector<int>& rows, int n)
{
    require_rows(rows);
    if (std::accumulate(rows.begin(), rows.end(), 0) != n)
        throw DomainError(ErrorKind::SizeMismatch, "rows do not sum to N = " + std::to_string(n));
    RationalVector out;
    for (int q : rows)
        for (int k = q - 1; k > 0; k -= 2) out.push_back(Rational(k, 2));
    out.resize(static_cast<std::size_t>(n / 2), Rational(0));
    return out;
}

QVariant parse_variant(std::string_view s)
{
    if (s == "default") return QVariant::Default;
    if (s == "outer") return QVariant::Outer;
    throw DomainError(ErrorKind::InvalidVariant, "unknown variant '" + std::string(s) + "'");
}

int q_unipotent_size(const LieType& g)
{
    switch (g.family) {
    case Family::A: return g.rank + 1;
    case Family::B: case Family::C: return 2 * g.rank + 1;
    case Family::D: return 2 * g.rank;
    default: break;
    }
    throw DomainError(ErrorKind::NonClassicalType, g.name() + " is not classical");
}

RationalVector q_unipotent_infchar(const Partition& q, const LieType& g, QVariant variant)
{
    const int n_prime = q_unipotent_size(g);
    if (q.size() != n_prime)
        throw DomainError(ErrorKind::SizeMismatch,
                          "q must be a partition of " + std::to_string(n_prime) + " for " + g.name());
    const bool all_even = std::all_of(q.parts().begin(), q.parts().end(), [](int p) { return p % 2 == 0; });
    if (variant == QVariant::Outer && !(g.family == Family::D && all_even))
        throw DomainError(ErrorKind::InvalidVariant, "outer variant needs type D and a partition with only even parts");
    if (g.family == Family::A) return half_h(q);
    RationalVector v = sorted_desc(rho_plus(q.parts(), n_prime));
    if (variant == QVariant::Outer) v.back() = -v.back();
    return v;
}

RationalVector xi_r(const Partition& q, const Rational& r)
{
    require_r(r);
    RationalVector out;
    for (int p : q.parts()) append_xi_row(p, r, out);
    const RationalVector rows = sorted_desc(out);
    if (rows != xi_r_columns(q, r))
        throw std::logic_error("row and column forms of xi_r disagree for " + q.to_string());
    return rows;
}

RationalVector xi_r_columns(const Partition& q, const Rational& r)
{
    require_r(r);
    const int sign0 = r.floor() < 0 ? -1 : 1;
    RationalVector out;
    const auto cols = transpose(q).parts();
    for (std::size_t idx = 0; idx < cols.size(); ++idx) {
        const int j = static_cast<int>(idx) + 1;
        const int sign = (j - 1) % 2 == 0 ? sign0 : -sign0;
        const Rational value = r + Rational(sign * (j / 2));
        for (int c = 0; c < cols[idx]; ++c) out.push_back(value);
    }
    return sorted_desc(std::move(out));
}

std::vector<RationalVector> xi_minimizers(const Partition& q, const Rational& r)
{
    require_r(r);
    const Partition cols = transpose(q);
    const bool flips = r.is_zero() || r == kHalf;
    const int flip_parity = r.is_zero() ? 0 : 1;
    std::vector<std::size_t> flippable;
    for (std::size_t i = 0; i < q.parts().size(); ++i)
        if (flips && q.parts()[i] % 2 == flip_parity) flippable.push_back(i);
    if (flippable.size() > 20) throw DomainError(ErrorKind::BoundExceeded, "too many flippable rows");

    std::vector<RationalVector> out;
    for (std::uint32_t mask = 0; mask < (1U << flippable.size()); ++mask) {
        std::vector<char> neg(q.parts().size(), 0);
        for (std::size_t b = 0; b < flippable.size(); ++b)
            if (mask & (1U << b)) neg[flippable[b]] = 1;
        RationalVector v;
        for (std::size_t i = 0; i < q.parts().size(); ++i) {
            const std::size_t start = v.size();
            append_xi_row(q.parts()[i], r, v);
            if (neg[i])
                for (std::size_t k = start; k < v.size(); ++k) v[k] = -v[k];
        }
        v = sorted_desc(std::move(v));
        std::vector<int> mult;
        for (std::size_t i = 0; i < v.size();) {
            std::size_t j = i;
            while (j < v.size() && v[j] == v[i]) ++j;
            mult.push_back(static_cast<int>(j - i));
            i = j;
        }
        if (Partition::from_unsorted(mult) == cols) out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

RationalVector xi_rvec(const std::vector<int>& rows, const RationalVector& r)
{
    require_rows(rows);
    if (rows.size() != r.size()) throw DomainError(ErrorKind::LengthMismatch, "need one r per row");
    RationalVector out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        require_r(r[i]);
        append_xi_row(rows[i], r[i], out);
    }
    return out;
}

RationalVector rho_s(const std::vector<int>& rows, const RationalVector& s)
{
    require_rows(rows);
    if (rows.size() != s.size()) throw DomainError(ErrorKind::LengthMismatch, "need one s per row");
    RationalVector out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!(s[i].abs() < kHalf))
            throw DomainError(ErrorKind::RangeViolation, "|s| = " + s[i].abs().to_string() + " is not < 1/2");
        append_row_string(rows[i], s[i], out);
    }
    return out;
}

RationalVector translate_shift(const std::vector<int>& rows, const RationalVector& s)
{
    if (rows.size() != s.size()) throw DomainError(ErrorKind::LengthMismatch, "need one s per row");
    RationalVector r;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] % 2 == 1) {
            r.push_back(s[i]);
            continue;
        }
        Rational v = s[i].floor() < 0 ? s[i] + kHalf : s[i] - kHalf;
        if (v == -kHalf) v = kHalf;
        r.push_back(v);
    }
    return r;
}

bool is_antisymmetric(const std::vector<int>& rows, const RationalVector& s, AntisymmetricGrouping* grouping)
{
    if (rows.size() != s.size()) return false;
    std::map<Rational, std::vector<int>> by_shift;
    for (std::size_t i = 0; i < rows.size(); ++i) by_shift[s[i]].push_back(rows[i]);
    AntisymmetricGrouping g;
    for (auto& [t, members] : by_shift) {
        std::sort(members.begin(), members.end(), std::greater<>());
        if (t.is_zero()) {
            g.zero_block = Partition::from_unsorted(members);
            continue;
        }
        auto it = by_shift.find(-t);
        if (it == by_shift.end()) return false;
        auto mirror = it->second;
        std::sort(mirror.begin(), mirror.end(), std::greater<>());
        if (mirror != members) return false;
        if (t > 0) g.pairs.emplace_back(Partition::from_unsorted(members), t);
    }
    if (grouping) *grouping = std::move(g);
    return true;
}

RationalVector cartan_half(const RationalVector& multiset)
{
    RationalVector sorted = sorted_desc(multiset);
    RationalVector neg;
    for (auto it = sorted.rbegin(); it != sorted.rend(); ++it) neg.push_back(-*it);
    if (neg != sorted) throw DomainError(ErrorKind::DomainViolation, "multiset is not symmetric under negation");
    RationalVector out;
    std::size_t zeros = 0;
    for (const auto& x : sorted) {
        if (x > 0) out.push_back(x);
        if (x.is_zero()) ++zeros;
    }
    if (multiset.size() % 2 == 1) --zeros;
    out.resize(out.size() + zeros / 2, Rational(0));
    return out;
}

RationalVector metaplectic_infchar(const Partition& q)
{
    if (q.size() % 2 != 0 || !is_eps_partition(q, 1))
        throw DomainError(ErrorKind::DomainViolation, q.to_string() + " is not a C-partition");
    if (q.empty()) throw DomainError(ErrorKind::DomainViolation, "metaplectic character needs n >= 1");
    const LieType g{Family::C, q.size() / 2};
    const Partition q_plus = join(q, Partition{1});
    RationalVector v = q_unipotent_infchar(q_plus, g);
    if (v != cartan_half(half_h(q)))
        throw std::logic_error("metaplectic character disagrees with half of h for " + q.to_string());
    return v;
}

} // namespace orbitdual
