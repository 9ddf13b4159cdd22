#include "orbitdual/enumerate.hpp"
#include "orbitdual/lattice.hpp"
#include "orbitdual/linalg.hpp"
#include "orbitdual/root_system.hpp"

#include <benchmark/benchmark.h>

using namespace orbitdual;

namespace {

void BM_CosetBallE8(benchmark::State& state)
{
    const LieType e8 = LieType::parse("E8");
    const RootSystem rs = build_root_system(e8);
    const Lattice root = lattice_preset(e8, "root");
    RationalVector shift = rs.rho();
    for (auto& x : shift) x /= 12;
    const Rational radius(state.range(0));
    for (auto _ : state) {
        std::uint64_t n = 0;
        CosetBall(shift, root, rs.form, radius, true).for_each([&](auto, const Rational&) {
            ++n;
            return true;
        });
        benchmark::DoNotOptimize(n);
        state.counters["points"] = static_cast<double>(n);
    }
}
BENCHMARK(BM_CosetBallE8)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_ChamberBallB4(benchmark::State& state)
{
    const RationalVector lambda = parse_rational_list("7/2,5/2,3/2,1/2");
    const ChamberBlock block{ChamberBlock::Kind::SignedChain, {0, 1, 2, 3}, {1, 1, 1, 1}};
    const Rational radius(state.range(0));
    for (auto _ : state) {
        std::uint64_t n = 0;
        ChamberBall(lambda, {block}, 1, radius, true).for_each([&](const RationalVector&, const Rational&) {
            ++n;
            return true;
        });
        benchmark::DoNotOptimize(n);
        state.counters["points"] = static_cast<double>(n);
    }
}
BENCHMARK(BM_ChamberBallB4)->Arg(21)->Arg(60)->Arg(120)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
