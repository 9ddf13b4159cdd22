#include "orbitdual/partition.hpp"

#include "orbitdual/error.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

namespace orbitdual {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw DomainError(ErrorKind::InvalidPartition, "partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw DomainError(ErrorKind::InvalidPartition, "partition parts must be weakly decreasing");
    }
}

Partition Partition::from_unsorted(std::vector<int> parts)
{
    if (std::any_of(parts.begin(), parts.end(), [](int p) { return p < 0; }))
        throw DomainError(ErrorKind::InvalidPartition, "negative part");
    std::erase(parts, 0);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

Partition Partition::parse(std::string_view text)
{
    std::vector<int> parts;
    std::size_t start = 0;
    while (start < text.size()) {
        auto comma = text.find(',', start);
        if (comma == std::string_view::npos) comma = text.size();
        auto tok = text.substr(start, comma - start);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.empty())
            throw DomainError(ErrorKind::InvalidPartition, "bad partition token '" + std::string(tok) + "'");
        parts.push_back(v);
        start = comma + 1;
    }
    return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::to_string() const
{
    std::string s = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + "]";
}

int multiplicity(const Partition& d, int s)
{
    return static_cast<int>(std::count(d.parts().begin(), d.parts().end(), s));
}

int height(const Partition& d, int s)
{
    return static_cast<int>(std::count_if(d.parts().begin(), d.parts().end(), [s](int p) { return p >= s; }));
}

Partition transpose(const Partition& d)
{
    std::vector<int> t;
    if (d.empty()) return {};
    t.reserve(static_cast<std::size_t>(d[0]));
    for (int i = 1; i <= d[0]; ++i) t.push_back(height(d, i));
    return Partition(std::move(t));
}

bool dominates(const Partition& p, const Partition& q)
{
    if (p.size() != q.size())
        throw DomainError(ErrorKind::SizeMismatch, "dominance needs equal sizes: " + p.to_string() + " vs " + q.to_string());
    const auto len = static_cast<std::size_t>(std::max(p.length(), q.length()));
    int sp = 0;
    int sq = 0;
    for (std::size_t i = 0; i < len; ++i) {
        sp += p[i];
        sq += q[i];
        if (sq > sp) return false;
    }
    return true;
}

bool is_eps_partition(const Partition& d, int epsilon)
{
    const auto& parts = d.parts();
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        if ((parts[i] - epsilon) % 2 == 0 && (j - i) % 2 != 0) return false;
        i = j;
    }
    return true;
}

bool is_special_class(const Partition& d, int epsilon, int eps_prime)
{
    if (!is_eps_partition(d, epsilon)) return false;
    if (epsilon == 0 && height(d, 0) % 2 != eps_prime) return false;
    for (int s : d.parts()) {
        if ((s - epsilon) % 2 == 0 && height(d, s) % 2 != eps_prime) return false;
    }
    return true;
}

int family_epsilon(Family x)
{
    switch (x) {
    case Family::B: case Family::D: return 0;
    case Family::C: return 1;
    default: break;
    }
    throw DomainError(ErrorKind::DomainViolation, std::string("no epsilon for family ") + family_letter(x));
}

bool is_family_partition(const Partition& d, Family x)
{
    if (x == Family::A) return true;
    const bool odd = d.size() % 2 == 1;
    if (odd != (x == Family::B)) return false;
    return is_eps_partition(d, family_epsilon(x));
}

Partition collapse(const Partition& d, Family x)
{
    const int eps = family_epsilon(x);
    if ((d.size() % 2 == 1) != (x == Family::B))
        throw DomainError(ErrorKind::ParityMismatch,
                          std::string(1, family_letter(x)) + "-collapse of " + d.to_string() + " has wrong parity");

    // Repair the largest offending part: lower its last copy by one and raise
    // the first later slot that is smaller by at least two (zero padding allowed).
    std::vector<int> p = d.parts();
    while (true) {
        int bad = -1;
        for (std::size_t i = 0; i < p.size();) {
            std::size_t j = i;
            while (j < p.size() && p[j] == p[i]) ++j;
            if ((p[i] - eps) % 2 == 0 && (j - i) % 2 == 1) {
                bad = static_cast<int>(j - 1);
                break;
            }
            i = j;
        }
        if (bad < 0) break;
        const int q = p[static_cast<std::size_t>(bad)];
        p[static_cast<std::size_t>(bad)] = q - 1;
        std::size_t k = static_cast<std::size_t>(bad) + 1;
        while (k < p.size() && p[k] >= q - 1) ++k;
        if (k == p.size()) p.push_back(0);
        p[k] += 1;
        std::erase(p, 0);
    }
    return Partition(std::move(p));
}

Partition d_plus(const Partition& d)
{
    std::vector<int> p = d.parts();
    if (p.empty()) return Partition{1};
    p.front() += 1;
    return Partition(std::move(p));
}

Partition d_minus(const Partition& d)
{
    if (d.empty()) throw DomainError(ErrorKind::EmptyPartition, "d- of the empty partition");
    std::vector<int> p = d.parts();
    p.back() -= 1;
    if (p.back() == 0) p.pop_back();
    return Partition(std::move(p));
}

Partition join(const Partition& a, const Partition& b)
{
    std::vector<int> p = a.parts();
    p.insert(p.end(), b.parts().begin(), b.parts().end());
    return Partition::from_unsorted(std::move(p));
}

std::vector<Partition> all_partitions(int n)
{
    std::vector<Partition> out;
    if (n < 0) return out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            cur.push_back(part);
            rec(remaining - part, part);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<Partition> family_partitions(int n, Family x)
{
    std::vector<Partition> out;
    for (auto& p : all_partitions(n))
        if (is_family_partition(p, x)) out.push_back(std::move(p));
    return out;
}

} // namespace orbitdual
