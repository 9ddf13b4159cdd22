#include "orbitdual/levi.hpp"

#include "orbitdual/error.hpp"

#include <algorithm>
#include <map>

namespace orbitdual {
namespace {

RationalVector root_vec(std::size_t dim, int i, int si, int j, int sj)
{
    RationalVector v(dim);
    v[static_cast<std::size_t>(i)] += si;
    if (j >= 0) v[static_cast<std::size_t>(j)] += sj;
    return v;
}

void append_family_roots(Family fam, const std::vector<int>& idx, std::size_t dim, std::vector<RationalVector>& out)
{
    for (std::size_t a = 0; a < idx.size(); ++a) {
        for (std::size_t b = a + 1; b < idx.size(); ++b)
            for (int s1 : {1, -1})
                for (int s2 : {1, -1}) out.push_back(root_vec(dim, idx[a], s1, idx[b], s2));
        if (fam == Family::B)
            for (int s : {1, -1}) out.push_back(root_vec(dim, idx[a], s, -1, 0));
        if (fam == Family::C)
            for (int s : {2, -2}) out.push_back(root_vec(dim, idx[a], s, -1, 0));
    }
}

void append_gl_roots(const std::vector<int>& idx, const std::vector<int>& sg, std::size_t dim, std::vector<RationalVector>& out)
{
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = 0; b < idx.size(); ++b)
            if (a != b) out.push_back(root_vec(dim, idx[a], sg[a], idx[b], -sg[b]));
}

std::string residual_name(Family f, int z)
{
    switch (f) {
    case Family::B: return "so(" + std::to_string(2 * z + 1) + ")";
    case Family::C: return "sp(" + std::to_string(2 * z) + ")";
    case Family::D: return "so(" + std::to_string(2 * z) + ")";
    default: return "gl(" + std::to_string(z) + ")";
    }
}

} // namespace

int Factor::standard_dim() const
{
    switch (family) {
    case Family::A: return rank();
    case Family::B: return 2 * rank() + 1;
    case Family::C: case Family::D: return 2 * rank();
    default: break;
    }
    throw DomainError(ErrorKind::NonClassicalType, "factor family must be classical");
}

std::string Factor::name() const { return residual_name(family, rank()); }

Factor whole_factor(Family family, int k)
{
    Factor f;
    f.family = family;
    for (int i = 0; i < k; ++i) {
        f.indices.push_back(i);
        f.signs.push_back(1);
    }
    f.label = "all";
    return f;
}

std::vector<int> LeviDecomposition::block_sizes() const
{
    std::vector<int> s;
    for (const auto& b : blocks) s.push_back(b.size());
    return s;
}

std::string LeviDecomposition::name() const
{
    std::string s;
    for (const auto& b : blocks) {
        if (!s.empty()) s += "+";
        s += "gl(" + std::to_string(b.size()) + ")";
    }
    if (factor.family != Family::A && (residual_size() > 0 || factor.family == Family::B)) {
        if (!s.empty()) s += "+";
        s += residual_name(factor.family, residual_size());
    }
    return s.empty() ? "0" : s;
}

LeviDecomposition centralizer_levi(const RationalVector& v, const Factor& factor)
{
    LeviDecomposition out;
    out.factor = factor;
    std::map<Rational, GlBlock, std::greater<>> groups;
    for (std::size_t k = 0; k < factor.indices.size(); ++k) {
        const int i = factor.indices[k];
        if (static_cast<std::size_t>(i) >= v.size())
            throw DomainError(ErrorKind::DimensionMismatch, "factor index outside the vector");
        const Rational x = v[static_cast<std::size_t>(i)];
        if (factor.family == Family::A) {
            const int s = factor.signs[k];
            auto& g = groups[s > 0 ? x : -x];
            g.indices.push_back(i);
            g.signs.push_back(s);
        } else if (x.is_zero()) {
            out.residual.push_back(i);
        } else {
            auto& g = groups[x.abs()];
            g.indices.push_back(i);
            g.signs.push_back(x.sign());
        }
    }
    for (auto& [value, block] : groups) {
        block.value = value;
        out.blocks.push_back(std::move(block));
    }
    return out;
}

Family dual_family(Family g)
{
    if (g == Family::B) return Family::C;
    if (g == Family::C) return Family::B;
    return g;
}

std::vector<Factor> integral_pseudo_levi(const RationalVector& lambda, const LieType& g)
{
    if (!g.classical()) throw DomainError(ErrorKind::NonClassicalType, g.name() + " is not classical");
    if (lambda.size() != static_cast<std::size_t>(g.coordinate_dim()))
        throw DomainError(ErrorKind::DimensionMismatch,
                          "expected " + std::to_string(g.coordinate_dim()) + " coordinates for " + g.name());

    std::vector<Factor> out;
    if (g.family == Family::A) {
        std::map<Rational, Factor> classes;
        for (std::size_t i = 0; i < lambda.size(); ++i) {
            auto& f = classes[lambda[i].frac()];
            f.family = Family::A;
            f.indices.push_back(static_cast<int>(i));
            f.signs.push_back(1);
        }
        for (auto& [t, f] : classes) {
            f.label = t.to_string() + "+Z";
            out.push_back(std::move(f));
        }
        return out;
    }

    const Family dual = dual_family(g.family);
    const Rational half(1, 2);
    Factor integer_class{dual, {}, {}, "integer"};
    Factor half_class{dual == Family::B ? Family::D : dual, {}, {}, "half-integer"};
    std::map<Rational, Factor> gl_classes;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        const Rational f = lambda[i].frac();
        const int idx = static_cast<int>(i);
        if (f.is_zero()) {
            integer_class.indices.push_back(idx);
            integer_class.signs.push_back(1);
        } else if (f == half) {
            half_class.indices.push_back(idx);
            half_class.signs.push_back(1);
        } else {
            const Rational t = f < half ? f : 1 - f;
            auto& cls = gl_classes[t];
            cls.family = Family::A;
            cls.indices.push_back(idx);
            cls.signs.push_back(f < half ? 1 : -1);
        }
    }
    if (!integer_class.indices.empty()) out.push_back(std::move(integer_class));
    if (!half_class.indices.empty()) out.push_back(std::move(half_class));
    for (auto& [t, f] : gl_classes) {
        f.label = "+-" + t.to_string() + "+Z";
        out.push_back(std::move(f));
    }
    return out;
}

std::vector<RationalVector> factor_roots(const Factor& f, std::size_t dim)
{
    std::vector<RationalVector> out;
    if (f.family == Family::A)
        append_gl_roots(f.indices, f.signs, dim, out);
    else
        append_family_roots(f.family, f.indices, dim, out);
    return out;
}

std::vector<RationalVector> levi_roots(const LeviDecomposition& l, std::size_t dim)
{
    std::vector<RationalVector> out;
    for (const auto& b : l.blocks) append_gl_roots(b.indices, b.signs, dim, out);
    if (l.factor.family != Family::A) append_family_roots(l.factor.family, l.residual, dim, out);
    return out;
}

} // namespace orbitdual
