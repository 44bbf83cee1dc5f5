#include <benchmark/benchmark.h>

#include "flipsym/search.hpp"
#include "flipsym/seeds.hpp"

using namespace flipsym;

namespace {

const Scheme& seed(int n) {
    static const Scheme s5 = make_start(5, Group::C3, parse_partition("{1,5},{2,4},{3}"));
    static const Scheme s6 = make_start(6, Group::C3xZ2, parse_partition("{1,2},{3,4},{5,6}"));
    return n == 5 ? s5 : s6;
}

}  // namespace

// Raw flip throughput: sample + apply, restarting when a state strands.
static void BM_Flip(benchmark::State& state) {
    const Scheme& start = seed(int(state.range(0)));
    WalkState walk(start);
    Xoshiro256 rng(42);
    uint64_t flips = 0;
    for (auto _ : state) {
        auto pair = walk.sample_flip(rng);
        if (!pair) {
            state.PauseTiming();
            walk = WalkState(start);
            state.ResumeTiming();
            continue;
        }
        benchmark::DoNotOptimize(walk.flip(pair->first, pair->second).rank_delta);
        ++flips;
    }
    state.SetItemsProcessed(int64_t(flips));
}
BENCHMARK(BM_Flip)->Arg(5)->Arg(6);

static void BM_PlusTransition(benchmark::State& state) {
    WalkState walk(seed(5));
    Xoshiro256 rng(42);
    for (auto _ : state) {
        auto pair = walk.sample_plus(rng);
        if (!pair)
            continue;
        benchmark::DoNotOptimize(walk.plus_transition(pair->first, pair->second).rank_delta);
    }
}
BENCHMARK(BM_PlusTransition);

// The driver loop itself, including its bookkeeping.
static void BM_RandomWalk(benchmark::State& state) {
    const Scheme& start = seed(5);
    WalkParams params;
    params.limit = 1'000'000;
    params.plus_interval = 50'000;
    params.target_rank = 1;
    uint64_t flips = 0;
    for (auto _ : state) {
        WalkState walk(start);
        Xoshiro256 rng(7);
        flips += random_walk(walk, params, rng).flips;
    }
    state.SetItemsProcessed(int64_t(flips));
}
BENCHMARK(BM_RandomWalk)->Unit(benchmark::kMillisecond);
