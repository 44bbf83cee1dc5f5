#include "flipsym/search.hpp"

#include <chrono>
#include <cmath>
#include <iostream>
#include <stdexcept>
#include <thread>
#include <vector>

namespace flipsym {

namespace {
constexpr int kFlipAttempts = 100;  // degenerate-orbit rejections before giving up
constexpr int kPlusAttempts = 100;
constexpr uint64_t kCheckMask = 0xFFF;  // shared-state checks every 4096 flips
}  // namespace

const char* to_string(WalkTermination t) {
    switch (t) {
        case WalkTermination::TargetReached: return "target-reached";
        case WalkTermination::LimitReached: return "limit";
        case WalkTermination::NoFlips: return "no-flips";
        case WalkTermination::Stopped: return "stopped";
    }
    return "?";
}

Xoshiro256 worker_stream(uint64_t seed, unsigned worker) {
    Xoshiro256 rng(seed);
    for (unsigned i = 0; i < worker; ++i)
        rng.long_jump();
    return rng;
}

namespace {

// Samples and applies one orbit flip; degenerate-orbit rejections resample.
bool apply_random_flip(WalkState& state, Xoshiro256& rng, MutationReport& report) {
    for (int attempt = 0; attempt < kFlipAttempts; ++attempt) {
        auto pair = state.sample_flip(rng);
        if (!pair)
            return false;
        report = state.flip(pair->first, pair->second);
        if (report.applied)
            return true;
    }
    return false;
}

bool apply_random_plus(WalkState& state, Xoshiro256& rng) {
    for (int attempt = 0; attempt < kPlusAttempts; ++attempt) {
        auto pair = state.sample_plus(rng);
        if (!pair)
            return false;
        if (state.plus_transition(pair->first, pair->second).applied)
            return true;
    }
    return false;
}

}  // namespace

WalkOutcome random_walk(WalkState& state, const WalkParams& params, Xoshiro256& rng,
                        const WalkHooks& hooks) {
    WalkOutcome out;
    uint64_t l = 0;
    uint64_t m = params.plus_interval;
    int r = state.rank();
    out.best = state.to_scheme();
    out.best_rank = r;
    out.termination = WalkTermination::LimitReached;
    if (hooks.current_rank)
        hooks.current_rank->store(r, std::memory_order_relaxed);

    uint64_t unflushed_flips = 0;
    MutationReport report;
    while (l < params.limit) {
        if ((l & kCheckMask) == 0 && hooks.shared) {
            hooks.shared->total_flips.fetch_add(unflushed_flips, std::memory_order_relaxed);
            unflushed_flips = 0;
            if (hooks.shared->stop.load(std::memory_order_relaxed)) {
                out.termination = WalkTermination::Stopped;
                break;
            }
        }
        if (!apply_random_flip(state, rng, report)) {
            out.termination = WalkTermination::NoFlips;
            break;
        }
        ++out.flips;
        ++unflushed_flips;
        if (report.rank_delta < 0) {
            const int cur = state.rank();
            if (cur < r) {
                r = cur;
                out.best = state.to_scheme();
                out.best_rank = r;
                if (hooks.current_rank)
                    hooks.current_rank->store(r, std::memory_order_relaxed);
                if (hooks.shared)
                    hooks.shared->offer_rank(r);
                if (r <= params.target_rank) {
                    out.termination = WalkTermination::TargetReached;
                    break;
                }
                l = 0;
            }
            m = l + params.plus_interval;
        }
        if (l >= m) {
            if (apply_random_plus(state, rng))
                ++out.plus_transitions;
            m = l + params.plus_interval;
        }
        ++l;
    }
    if (hooks.shared)
        hooks.shared->total_flips.fetch_add(unflushed_flips, std::memory_order_relaxed);
    if (!verify_f2(out.best))
        throw std::logic_error("walk produced a scheme that fails verification");
    return out;
}

WalkOutcome run_parallel(const Scheme& start, const WalkParams& params,
                         const SearchOptions& options) {
    const unsigned workers = std::max(1u, options.workers);
    SearchShared shared;
    std::vector<WalkOutcome> outcomes(workers);
    std::vector<std::atomic<int>> current_ranks(workers);
    for (auto& c : current_ranks)
        c.store(start.rank(), std::memory_order_relaxed);

    auto started = std::chrono::steady_clock::now();
    std::atomic<bool> all_done{false};

    auto worker_body = [&](unsigned w) {
        WalkState state(start);
        Xoshiro256 rng = worker_stream(params.seed, w);
        WalkHooks hooks{&shared, &current_ranks[w]};
        outcomes[w] = random_walk(state, params, rng, hooks);
        if (outcomes[w].termination == WalkTermination::TargetReached)
            shared.stop.store(true, std::memory_order_relaxed);
    };

    std::thread reporter;
    if (options.progress_interval > 0 || options.max_seconds > 0) {
        reporter = std::thread([&] {
            std::ostream& out = options.progress_out ? *options.progress_out : std::cerr;
            uint64_t last_flips = 0;
            auto last_time = started;
            auto next_report = started + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                             std::chrono::duration<double>(
                                                 options.progress_interval > 0 ? options.progress_interval : 3600.0));
            while (!all_done.load(std::memory_order_relaxed)) {
                std::this_thread::sleep_for(std::chrono::milliseconds(50));
                auto now = std::chrono::steady_clock::now();
                if (options.max_seconds > 0 &&
                    std::chrono::duration<double>(now - started).count() >= options.max_seconds)
                    shared.stop.store(true, std::memory_order_relaxed);
                if (options.progress_interval > 0 && now >= next_report) {
                    const uint64_t flips = shared.total_flips.load(std::memory_order_relaxed);
                    const double dt = std::chrono::duration<double>(now - last_time).count();
                    const double rate = dt > 0 ? double(flips - last_flips) / dt : 0.0;
                    int current = std::numeric_limits<int>::max();
                    for (const auto& c : current_ranks)
                        current = std::min(current, c.load(std::memory_order_relaxed));
                    int best = shared.best_rank.load(std::memory_order_relaxed);
                    if (best == std::numeric_limits<int>::max())
                        best = current;
                    out << "flips=" << flips << " rank=" << current << " best=" << best
                        << " rate=" << std::llround(rate) << "\n";
                    last_flips = flips;
                    last_time = now;
                    next_report = now + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                            std::chrono::duration<double>(options.progress_interval));
                }
            }
        });
    }

    if (workers == 1) {
        worker_body(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(worker_body, w);
        for (auto& t : pool)
            t.join();
    }
    all_done.store(true, std::memory_order_relaxed);
    if (reporter.joinable())
        reporter.join();

    std::size_t winner = 0;
    for (std::size_t w = 1; w < outcomes.size(); ++w)
        if (outcomes[w].best_rank < outcomes[winner].best_rank)
            winner = w;
    if (!verify_f2(outcomes[winner].best))
        throw std::logic_error("search produced a scheme that fails verification");
    return outcomes[winner];
}

}  // namespace flipsym
