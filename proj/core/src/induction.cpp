#include "orbitdual/induction.hpp"

#include "orbitdual/error.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

namespace orbitdual {

Partition induce_staged(Family ambient, const std::vector<int>& gl_blocks, int residual_coords)
{
    if (residual_coords < 0 || std::any_of(gl_blocks.begin(), gl_blocks.end(), [](int a) { return a <= 0; }))
        throw DomainError(ErrorKind::InvalidDecomposition, "block sizes must be positive");
    if (ambient == Family::A) {
        if (residual_coords != 0) throw DomainError(ErrorKind::InvalidDecomposition, "gl ambient has no residual block");
        return transpose(Partition::from_unsorted(gl_blocks));
    }
    const int base = ambient == Family::B ? 2 * residual_coords + 1 : 2 * residual_coords;
    std::vector<int> q(static_cast<std::size_t>(base), 1);
    for (int a : gl_blocks) {
        if (q.size() < static_cast<std::size_t>(a)) q.resize(static_cast<std::size_t>(a), 0);
        for (int i = 0; i < a; ++i) q[static_cast<std::size_t>(i)] += 2;
        q = collapse(Partition::from_unsorted(q), ambient).parts();
    }
    return Partition::from_unsorted(std::move(q));
}

Partition induce_zero_factor(const LeviDecomposition& levi)
{
    const auto sizes = levi.block_sizes();
    const int total = std::accumulate(sizes.begin(), sizes.end(), 0) + levi.residual_size();
    if (total != levi.factor.rank())
        throw DomainError(ErrorKind::InvalidDecomposition, "Levi blocks do not cover the factor " + levi.factor.name());
    if (levi.factor.family == Family::A && levi.residual_size() != 0)
        throw DomainError(ErrorKind::InvalidDecomposition, "gl factor cannot have a residual block");
    return induce_staged(levi.factor.family, sizes, levi.residual_size());
}

OrbitTuple induce_zero(const std::vector<LeviDecomposition>& levis)
{
    OrbitTuple t;
    for (const auto& l : levis) t.entries.emplace_back(l.factor, induce_zero_factor(l));
    return t;
}

OrbitTuple induced_tuple(const RationalVector& v, const std::vector<Factor>& factors)
{
    OrbitTuple t;
    for (const auto& f : factors) t.entries.emplace_back(f, induce_zero_factor(centralizer_levi(v, f)));
    return t;
}

bool orbit_tuple_leq(const OrbitTuple& a, const OrbitTuple& b)
{
    if (a.entries.size() != b.entries.size())
        throw DomainError(ErrorKind::FactorMismatch, "orbit tuples have different factor counts");
    for (std::size_t i = 0; i < a.entries.size(); ++i)
        if (!(a.entries[i].first == b.entries[i].first))
            throw DomainError(ErrorKind::FactorMismatch, "orbit tuples are over different factors");
    for (std::size_t i = 0; i < a.entries.size(); ++i)
        if (!dominates(b.entries[i].second, a.entries[i].second)) return false;
    return true;
}

long long orbit_dimension(const Partition& d, Family family)
{
    const long long n = d.size();
    long long sq = 0;
    const Partition columns = transpose(d);
    for (int c : columns.parts()) sq += static_cast<long long>(c) * c;
    const long long odd = std::count_if(d.parts().begin(), d.parts().end(), [](int p) { return p % 2 == 1; });
    switch (family) {
    case Family::A: return n * n - sq;
    case Family::B: case Family::D: return n * (n - 1) / 2 - (sq - odd) / 2;
    case Family::C: return n * (n + 1) / 2 - (sq + odd) / 2;
    default: break;
    }
    throw DomainError(ErrorKind::NonClassicalType, "orbit dimension needs a classical family");
}

long long positive_roots(Family family, int rank)
{
    const long long k = rank;
    switch (family) {
    case Family::A: return k * (k - 1) / 2; // gl(k)
    case Family::B: case Family::C: return k * k;
    case Family::D: return k * (k - 1);
    default: break;
    }
    throw DomainError(ErrorKind::NonClassicalType, "positive roots need a classical family");
}

long long levi_positive_roots(const LeviDecomposition& levi)
{
    long long total = 0;
    for (const auto& b : levi.blocks) total += positive_roots(Family::A, b.size());
    if (levi.factor.family != Family::A) total += positive_roots(levi.factor.family, levi.residual_size());
    return total;
}

LeviShape parse_levi_shape(std::string_view text)
{
    LeviShape shape;
    bool have_residual = false;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        if (comma == std::string_view::npos) comma = text.size();
        auto tok = text.substr(start, comma - start);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        start = comma + 1;
        if (tok.empty()) {
            if (comma == text.size()) break;
            throw DomainError(ErrorKind::InvalidDecomposition, "empty Levi component");
        }
        int value = 0;
        std::string_view digits;
        bool residual = false;
        if (tok.starts_with("gl")) {
            digits = tok.substr(2);
        } else if (tok.starts_with("res")) {
            digits = tok.substr(3);
            residual = true;
        } else {
            throw DomainError(ErrorKind::InvalidDecomposition, "unknown Levi component '" + std::string(tok) + "'");
        }
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
        if (ec != std::errc{} || ptr != digits.data() + digits.size() || value < 0 || (!residual && value == 0))
            throw DomainError(ErrorKind::InvalidDecomposition, "bad Levi component '" + std::string(tok) + "'");
        if (residual) {
            if (have_residual) throw DomainError(ErrorKind::InvalidDecomposition, "at most one residual block");
            have_residual = true;
            shape.residual_matrix_size = value;
        } else {
            shape.gl_blocks.push_back(value);
        }
        if (comma == text.size()) break;
    }
    return shape;
}

int residual_coordinates(const LeviShape& shape, const LieType& ambient)
{
    if (!ambient.classical()) throw DomainError(ErrorKind::NonClassicalType, ambient.name() + " is not classical");
    const int k = shape.residual_matrix_size;
    int z = 0;
    switch (ambient.family) {
    case Family::A:
        if (k != 0) throw DomainError(ErrorKind::InvalidDecomposition, "gl ambient has no residual block");
        break;
    case Family::B:
        if (k == 0) {
            z = 0;
        } else if (k % 2 == 1) {
            z = (k - 1) / 2;
        } else {
            throw DomainError(ErrorKind::InvalidDecomposition, "B residual must be so(odd)");
        }
        break;
    case Family::C: case Family::D:
        if (k % 2 != 0) throw DomainError(ErrorKind::InvalidDecomposition, "residual matrix size must be even");
        z = k / 2;
        break;
    default: break;
    }
    const int total = std::accumulate(shape.gl_blocks.begin(), shape.gl_blocks.end(), 0) + z;
    if (total != ambient.coordinate_dim())
        throw DomainError(ErrorKind::InvalidDecomposition,
                          "Levi shape covers " + std::to_string(total) + " coordinates, " + ambient.name() + " has " +
                              std::to_string(ambient.coordinate_dim()));
    return z;
}

} // namespace orbitdual
