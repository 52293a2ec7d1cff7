// Serial reference path against the OpenMP path for the exhaustive kernels.
// Arg(0) is serial, Arg(1) parallel.

#include <benchmark/benchmark.h>

#include <random>

#include "klein/group.hpp"
#include "klein/localfield.hpp"
#include "klein/representations.hpp"
#include "klein/topology.hpp"

using namespace klein;

namespace {

Execution mode(const benchmark::State& state) { return state.range(0) ? Execution::parallel : Execution::serial; }

void label(benchmark::State& state) { state.SetLabel(state.range(0) ? "parallel" : "serial"); }

void BM_CocycleWindow(benchmark::State& state)
{
    const auto mu = Cocycle::mu_t();
    for (auto _ : state) benchmark::DoNotOptimize(check_cocycle_identity(mu, 3, mode(state)));
    label(state);
}
BENCHMARK(BM_CocycleWindow)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_CocycleQuotient(benchmark::State& state)
{
    const auto mu = Cocycle::mu_t();
    for (auto _ : state) benchmark::DoNotOptimize(check_cocycle_identity_quotient(mu, 6, mode(state)));
    label(state);
}
BENCHMARK(BM_CocycleQuotient)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_EnumerateM0(benchmark::State& state)
{
    const ResidueData k(13);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_m0(k, 3, mode(state)));
    label(state);
}
BENCHMARK(BM_EnumerateM0)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_GridFixedPoints(benchmark::State& state)
{
    const auto f = TorusAutomorphism::make(IntMatrix{{2, 1}, {1, 1}}, {Rational(1, 8), Rational(3, 8)});
    for (auto _ : state) benchmark::DoNotOptimize(grid_fixed_points(f, 8 * 96, mode(state)));
    label(state);
}
BENCHMARK(BM_GridFixedPoints)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Census(benchmark::State& state)
{
    for (auto _ : state) benchmark::DoNotOptimize(finite_census(6, Flavor::untwisted, mode(state)));
    label(state);
}
BENCHMARK(BM_Census)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
