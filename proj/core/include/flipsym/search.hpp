#pragma once

#include <atomic>
#include <cstdint>
#include <iosfwd>
#include <limits>

#include "flipsym/walk_state.hpp"

namespace flipsym {

struct WalkParams {
    uint64_t limit = 100'000'000;     // path-length limit L (flip count)
    uint64_t plus_interval = 50'000;  // plus-transition parameter M
    int target_rank = 1;              // target rank R
    uint64_t seed = 1;                // RNG seed (consumed by run_parallel)
};

enum class WalkTermination { TargetReached, LimitReached, NoFlips, Stopped };

const char* to_string(WalkTermination t);

struct WalkOutcome {
    Scheme best;
    int best_rank = 0;
    uint64_t flips = 0;
    uint64_t plus_transitions = 0;
    WalkTermination termination = WalkTermination::LimitReached;
};

// Cross-worker cell: a monotonic best-rank value plus a stop flag, checked
// at bounded intervals inside the walk loop.  No scheme sharing mid-walk.
struct SearchShared {
    std::atomic<int> best_rank{std::numeric_limits<int>::max()};
    std::atomic<bool> stop{false};
    std::atomic<uint64_t> total_flips{0};

    void offer_rank(int r) {
        int cur = best_rank.load(std::memory_order_relaxed);
        while (r < cur && !best_rank.compare_exchange_weak(cur, r, std::memory_order_relaxed)) {
        }
    }
};

// Worker w consumes the stream obtained by seeding xoshiro256** with
// `seed` and applying w long jumps.
Xoshiro256 worker_stream(uint64_t seed, unsigned worker);

struct WalkHooks {
    SearchShared* shared = nullptr;
    std::atomic<int>* current_rank = nullptr;
};

// The random-walk driver.  Follows random orbit flips; when a flip lowers
// the rank below the best seen, snapshots the scheme, resets the path
// counter and, at the target, stops.  After plus_interval flips without a
// reduction a random orbit plus-transition is applied.  Returns the best
// scheme seen even when no flips remain or the limit runs out.
WalkOutcome random_walk(WalkState& state, const WalkParams& params, Xoshiro256& rng,
                        const WalkHooks& hooks = {});

struct SearchOptions {
    unsigned workers = 1;
    double progress_interval = 0;  // seconds between stderr status lines; 0 = off
    double max_seconds = 0;        // wall-clock cutoff; 0 = none
    std::ostream* progress_out = nullptr;  // defaults to std::cerr
};

// Launches independent walks from fresh copies of the start scheme with
// per-worker RNG streams derived from (params.seed, worker index).  The
// first walk to reach the target signals a cooperative stop; the best
// outcome wins (ties to the lowest worker index).
WalkOutcome run_parallel(const Scheme& start, const WalkParams& params,
                         const SearchOptions& options = {});

}  // namespace flipsym
