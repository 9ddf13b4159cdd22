#include "corpus.hpp"

#include "orbitdual/infchar.hpp"
#include "orbitdual/partition.hpp"

#include <random>
#include <string>

namespace orbitdual::testing {
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

} // namespace

std::vector<Instance> oracle_corpus()
{
    std::vector<Instance> out;
    std::mt19937 rng(777);
    const auto types = [] {
        std::vector<LieType> t;
        for (const auto& g : classical_types(4))
            if (!(g.family == Family::A && g.rank > 3)) t.push_back(g);
        return t;
    }();
    const std::int64_t dens[] = {1, 2, 2, 3, 4};
    while (out.size() < 200) {
        const LieType g = types[std::uniform_int_distribution<std::size_t>(0, types.size() - 1)(rng)];
        std::vector<std::string> presets{"root", "integer"};
        if (g.family != Family::A) presets.emplace_back("weight");
        const std::string preset = presets[std::uniform_int_distribution<std::size_t>(0, presets.size() - 1)(rng)];
        const auto dim = static_cast<std::size_t>(g.coordinate_dim());
        RationalVector lambda(dim);
        if (out.size() % 3 == 0 && g.family != Family::A) {
            // A q-unipotent character, possibly nudged off the unipotent locus.
            const auto parts = all_partitions(q_unipotent_size(g));
            const Partition& q = parts[std::uniform_int_distribution<std::size_t>(0, parts.size() - 1)(rng)];
            lambda = q_unipotent_infchar(q, g);
            if (out.size() % 2 == 0) lambda[0] += Rational(1, 2);
        } else {
            const std::int64_t den = dens[std::uniform_int_distribution<std::size_t>(0, 4)(rng)];
            std::uniform_int_distribution<std::int64_t> num(-3 * den, 3 * den);
            for (auto& x : lambda) x = Rational(num(rng), den);
        }
        if (dot(lambda, lambda) > Rational(16)) continue;
        out.push_back({g.name() + " " + preset + " " + to_string(lambda), g, lambda, lattice_preset(g, preset)});
    }
    return out;
}

} // namespace orbitdual::testing
