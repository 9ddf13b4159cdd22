#include "orbitdual/partition_oracle.hpp"

#include "orbitdual/error.hpp"

namespace orbitdual {

Partition brute_collapse_oracle(const Partition& d, Family x, int bound)
{
    const int n = d.size();
    if (n > bound)
        throw DomainError(ErrorKind::BoundExceeded,
                          "oracle bound " + std::to_string(bound) + " exceeded by |d| = " + std::to_string(n));
    if ((n % 2 == 1) != (x == Family::B))
        throw DomainError(ErrorKind::ParityMismatch, "no " + std::string(1, family_letter(x)) + "-partition of size " + std::to_string(n));

    std::vector<Partition> below;
    for (auto& p : family_partitions(n, x))
        if (dominates(d, p)) below.push_back(std::move(p));

    for (const auto& cand : below) {
        bool is_max = true;
        for (const auto& other : below) {
            if (!dominates(cand, other)) {
                is_max = false;
                break;
            }
        }
        if (is_max) return cand;
    }
    throw DomainError(ErrorKind::NoMaximum, "no dominance maximum below " + d.to_string());
}

} // namespace orbitdual
