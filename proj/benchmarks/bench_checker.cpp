#include "orbitdual/checker.hpp"
#include "orbitdual/infchar.hpp"
#include "orbitdual/root_system.hpp"

#include <benchmark/benchmark.h>

using namespace orbitdual;

namespace {

void BM_ClassicalD10(benchmark::State& state)
{
    const LieType d10{Family::D, 10};
    const RationalVector lambda = rho_plus({10, 5, 5}, 20);
    const Lattice root = lattice_preset(d10, "root");
    CheckOptions options;
    options.jobs = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(mild_check_classical(lambda, d10, root, options));
}
BENCHMARK(BM_ClassicalD10)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ClassicalCanonicalVsFull(benchmark::State& state)
{
    const LieType c4{Family::C, 4};
    const RationalVector lambda = q_unipotent_infchar(Partition{4, 3, 2}, c4);
    const Lattice root = lattice_preset(c4, "root");
    CheckOptions options;
    options.canonicalize = state.range(0) != 0;
    for (auto _ : state) benchmark::DoNotOptimize(mild_check_classical(lambda, c4, root, options));
}
BENCHMARK(BM_ClassicalCanonicalVsFull)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

void BM_ExceptionalRho(benchmark::State& state)
{
    const LieType t = LieType::parse(state.range(0) == 0 ? "G2" : "F4");
    const RationalVector rho = build_root_system(t).rho();
    const Lattice root = lattice_preset(t, "root");
    for (auto _ : state) benchmark::DoNotOptimize(mild_check_exceptional(rho, t, root));
}
BENCHMARK(BM_ExceptionalRho)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
