#include "orbitdual/cli/corpus.hpp"

#include "orbitdual/infchar.hpp"
#include "orbitdual/partition.hpp"

#include <functional>
#include <map>
#include <random>

namespace orbitdual::cli {
namespace {

std::vector<LieType> classical_types(int max_rank)
{
    std::vector<LieType> out;
    for (int n = 1; n <= max_rank; ++n) {
        out.push_back({Family::A, n});
        out.push_back({Family::B, n});
        out.push_back({Family::C, n});
        if (n >= 2) out.push_back({Family::D, n});
    }
    return out;
}

bool all_even(const Partition& q)
{
    for (int p : q.parts())
        if (p % 2 != 0) return false;
    return true;
}

} // namespace

std::vector<Instance> q_unipotent_corpus()
{
    std::vector<Instance> out;
    for (int np = 5; np <= 9; ++np) {
        for (const auto& g : classical_types(4)) {
            if (q_unipotent_size(g) != np) continue;
            const Lattice root = lattice_preset(g, "root");
            for (const auto& q : all_partitions(np)) {
                out.push_back({g.name() + " q=" + q.to_string(), g, q_unipotent_infchar(q, g), root});
                if (g.family == Family::D && all_even(q))
                    out.push_back({g.name() + " q=" + q.to_string() + " outer", g,
                                   q_unipotent_infchar(q, g, QVariant::Outer), root});
            }
        }
    }
    return out;
}

std::vector<Instance> metaplectic_corpus()
{
    std::vector<Instance> out;
    for (int n = 1; n <= 4; ++n) {
        const LieType g{Family::C, n};
        const Lattice root = lattice_preset(g, "root");
        for (const auto& q : family_partitions(2 * n, Family::C))
            out.push_back({g.name() + " q=" + q.to_string(), g, metaplectic_infchar(q), root});
    }
    return out;
}

std::vector<Instance> type_a_corpus()
{
    std::vector<Instance> out;
    for (int n = 2; n <= 6; ++n) {
        const LieType g{Family::A, n - 1};
        const Lattice z = lattice_preset(g, "integer");
        for (const auto& q : all_partitions(n))
            for (const auto& r : {Rational(0), Rational(1, 4), Rational(1, 2)})
                out.push_back({"gl(" + std::to_string(n) + ") q=" + q.to_string() + " r=" + r.to_string(), g,
                               xi_r(q, r), z});
    }
    std::mt19937 rng(1234);
    std::uniform_int_distribution<int> size(2, 6);
    std::uniform_int_distribution<std::int64_t> num(-5, 6); // r = num/12 in (-1/2, 1/2]
    for (int trial = 0; trial < 50; ++trial) {
        const int n = size(rng);
        const auto parts = all_partitions(n);
        const Partition& q = parts[std::uniform_int_distribution<std::size_t>(0, parts.size() - 1)(rng)];
        RationalVector r;
        for (std::size_t i = 0; i < q.parts().size(); ++i) r.push_back(Rational(num(rng), 12));
        const LieType g{Family::A, n - 1};
        out.push_back({"gl(" + std::to_string(n) + ") q=" + q.to_string() + " r=" + to_string(r), g,
                       xi_rvec(q.parts(), r), lattice_preset(g, "integer")});
    }
    return out;
}

std::vector<Instance> antisymmetric_corpus()
{
    std::vector<Instance> out;
    const Rational shifts[] = {Rational(1, 4), Rational(1, 3)};
    for (int big_n = 2; big_n <= 9; ++big_n) {
        std::vector<std::pair<LieType, Family>> targets; // (g, family of the dual algebra)
        const int n = big_n / 2;
        if (big_n % 2 == 1) {
            targets.push_back({{Family::C, n}, Family::B});
        } else {
            targets.push_back({{Family::B, n}, Family::C});
            if (n >= 2) targets.push_back({{Family::D, n}, Family::D});
        }
        for (const auto& q : all_partitions(big_n)) {
            std::map<int, int> mult;
            for (int p : q.parts()) ++mult[p];
            std::vector<std::pair<int, int>> values(mult.begin(), mult.end());
            // For each distinct part, choose how many of its pairs take shift 1/4 and 1/3.
            std::vector<int> rows;
            RationalVector s;
            std::function<void(std::size_t, bool)> rec = [&](std::size_t i, bool shifted) {
                if (i == values.size()) {
                    if (!shifted) return;
                    const RationalVector v = cartan_half(rho_s(rows, s));
                    for (const auto& [g, dual] : targets) {
                        if (!is_family_partition(q, dual)) continue;
                        out.push_back({g.name() + " q=" + q.to_string() + " s=" + to_string(s), g, v,
                                       lattice_preset(g, "root")});
                    }
                    return;
                }
                const auto [value, m] = values[i];
                for (int a = 0; 2 * a <= m; ++a)
                    for (int b = 0; 2 * (a + b) <= m; ++b) {
                        const std::size_t mark = rows.size();
                        for (int k = 0; k < a; ++k) {
                            rows.insert(rows.end(), {value, value});
                            s.push_back(shifts[0]);
                            s.push_back(-shifts[0]);
                        }
                        for (int k = 0; k < b; ++k) {
                            rows.insert(rows.end(), {value, value});
                            s.push_back(shifts[1]);
                            s.push_back(-shifts[1]);
                        }
                        for (int k = 0; k < m - 2 * (a + b); ++k) {
                            rows.push_back(value);
                            s.push_back(0);
                        }
                        rec(i + 1, shifted || a + b > 0);
                        rows.resize(mark);
                        s.resize(mark);
                    }
            };
            rec(0, false);
        }
    }
    return out;
}

} // namespace orbitdual::cli
