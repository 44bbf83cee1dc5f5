#include <benchmark/benchmark.h>

#include "flipsym/seeds.hpp"

using namespace flipsym;

static void BM_VerifyF2(benchmark::State& state) {
    const int n = int(state.range(0));
    const Scheme s =
        n == 5 ? make_start(5, Group::C3, parse_partition("{1,5},{2,4},{3}"))
               : make_start(6, Group::C3xZ2, parse_partition("{1,2},{3,4},{5,6}"));
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_f2(s));
}
BENCHMARK(BM_VerifyF2)->Arg(5)->Arg(6)->Unit(benchmark::kMicrosecond);

static void BM_MultiplicationTensor(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(mmt(int(state.range(0))).ones());
}
BENCHMARK(BM_MultiplicationTensor)->Arg(5)->Arg(8)->Unit(benchmark::kMicrosecond);
