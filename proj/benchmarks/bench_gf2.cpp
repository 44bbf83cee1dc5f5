#include <benchmark/benchmark.h>

#include "flipsym/lift.hpp"
#include "flipsym/seeds.hpp"

using namespace flipsym;

// One full refinement step of the 5x5 cyclic system: residual, solve,
// update.  n^6 equations over 3*k*n^2 unknowns.
static void BM_HenselStep(benchmark::State& state) {
    const Scheme seed = make_start(5, Group::C3, parse_partition("{1,5},{2,4},{3}"));
    const LiftState st = lift_state_from(seed);
    const Gf2Matrix jac = brent_jacobian(st);
    HenselOptions options;
    options.jacobian = &jac;
    for (auto _ : state) {
        auto next = hensel_step(st, options);
        benchmark::DoNotOptimize(next.has_value());
    }
}
BENCHMARK(BM_HenselStep)->Unit(benchmark::kMillisecond);

static void BM_Jacobian(benchmark::State& state) {
    const Scheme seed = make_start(5, Group::C3, parse_partition("{1,5},{2,4},{3}"));
    const LiftState st = lift_state_from(seed);
    for (auto _ : state)
        benchmark::DoNotOptimize(brent_jacobian(st).rows());
}
BENCHMARK(BM_Jacobian)->Unit(benchmark::kMillisecond);
