// Integration gate: one pass/fail line per criterion.  Criteria can be
// selected by number on the command line; by default all run.  The
// throughput criterion is soft: a measured shortfall is reported and
// analysed in docs/performance.md without failing the suite.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "flipsym/atlas.hpp"
#include "flipsym/lift.hpp"
#include "flipsym/scheme_io.hpp"
#include "flipsym/search.hpp"
#include "flipsym/seeds.hpp"

using namespace flipsym;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Criterion {
    int number;
    std::string description;
    std::function<bool(std::string&)> run;
    bool soft = false;
};

// Explicit 1-based basis helper.
BitMatrix E(int n, int i, int j) {
    return BitMatrix::basis(n, i - 1, j - 1);
}

BitMatrix diag(int n, std::initializer_list<int> indices) {
    BitMatrix m = BitMatrix::zero(n);
    for (int i : indices)
        m ^= E(n, i, i);
    return m;
}

std::vector<RankOneTensor> sorted_expansion(const Scheme& s) {
    auto out = expand(s);
    std::sort(out.begin(), out.end());
    return out;
}

// Schemes found by the search criteria, consumed by the lifting criterion.
std::vector<Scheme> g_found_schemes;

unsigned search_workers() {
    return std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
}

bool criterion1(std::string& detail) {
    const auto t0 = Clock::now();
    const AnyScheme z = load_scheme(std::filesystem::path(FLIPSYM_DATA_DIR) / "strassen.z.scheme");
    const IntScheme& zs = std::get<IntScheme>(z);
    if (!verify_int(zs))
        return false;
    const Scheme f2 = mod2(zs);
    if (!verify_f2(f2))
        return false;
    if (expand(f2).size() != 7 || zs.rank() != 7)
        return false;
    std::ostringstream o;
    o << "verified over Z and mod 2, rank 7, " << seconds_since(t0) << " s";
    detail = o.str();
    return seconds_since(t0) < 1.0;
}

bool criterion2(std::string& detail) {
    const auto t0 = Clock::now();
    struct Case {
        int n;
        Group g;
        const char* partition;
    };
    const Case cases[] = {
        {2, Group::C3xZ2, "{1,2}"},
        {3, Group::C3, "{1,3},{2}"},
        {5, Group::C3, "{1,5},{2,4},{3}"},
        {6, Group::C3xZ2, "{1,2},{3,4},{5,6}"},
    };
    std::ostringstream o;
    for (const auto& c : cases) {
        const Scheme s = make_start(c.n, c.g, parse_partition(c.partition));
        if (!verify_f2(s)) {
            detail = std::string("seed fails verification at n=") + std::to_string(c.n);
            return false;
        }
        for (const auto& rep : s.orbits)
            if (orbit_size(rep, c.g) != group_order(c.g)) {
                detail = std::string("non-full orbit at n=") + std::to_string(c.n);
                return false;
            }
        o << 'n' << c.n << ":rank" << s.rank() << ' ';
    }
    o << seconds_since(t0) << " s";
    detail = o.str();
    return seconds_since(t0) < 1.0;
}

bool criterion3(std::string& detail) {
    const auto t0 = Clock::now();
    WalkState state(make_start(2, Group::C3xZ2, parse_partition("{1,2}")));
    // flip at the shared first factor, then through the rotated/mirrored
    // views exposing the two shared factors, which removes an orbit
    if (!state.flip({1, 0}, {0, 0}).applied)
        return false;
    MutationReport second = state.flip({0, 1}, {1, 3});
    if (!second.applied || second.zeros_removed != 1)
        return false;
    if (state.rank() != 7)
        return false;
    const Scheme result = state.to_scheme();
    if (!verify_f2(result))
        return false;
    // expansion equals the classic decomposition mod 2
    Scheme classic;
    classic.n = 2;
    classic.group = Group::C3xZ2;
    classic.fixed.emplace_back(BitMatrix(2, 0x9), BitMatrix(2, 0x9), BitMatrix(2, 0x9));
    classic.orbits.emplace_back(BitMatrix(2, 0x1), BitMatrix(2, 0xa), BitMatrix(2, 0xc));
    if (sorted_expansion(result) != sorted_expansion(classic))
        return false;
    g_found_schemes.push_back(result);
    std::ostringstream o;
    o << "rank 7 reached in two orbit flips, " << seconds_since(t0) << " s";
    detail = o.str();
    return seconds_since(t0) < 1.0;
}

bool criterion4(std::string& detail) {
    const auto t0 = Clock::now();
    int checked = 0;
    for (Group g : {Group::C3, Group::C3xZ2}) {
        for (int n : {2, 3}) {
            const char* partition = n == 2 ? "{1,2}" : "{1,3},{2}";
            const Scheme seed = make_start(n, g, parse_partition(partition));
            WalkState state(seed);
            Xoshiro256 rng(uint64_t(n) * 131 + int(g));
            int local = 0;
            for (int i = 0; i < 5000 && local < 300; ++i) {
                auto pair = state.sample_flip(rng);
                if (!pair) {
                    state = WalkState(seed);  // stranded at a flipless scheme
                    continue;
                }
                const int order = group_order(g);
                const RankOneTensor t1 = state.occurrence_tensor(pair->first);
                const RankOneTensor t2 = state.occurrence_tensor(pair->second);
                const Scheme before_scheme = state.to_scheme();
                const auto before = expand(before_scheme);
                TensorF2 sum_before(n);
                for (const auto& t : before)
                    sum_before.add(t);

                const MutationReport report = state.flip(pair->first, pair->second);
                if (!report.applied)
                    continue;
                const auto after = expand(state.to_scheme());
                TensorF2 sum_after(n);
                for (const auto& t : after)
                    sum_after.add(t);
                if (!(sum_after == sum_before)) {
                    detail = "expanded sum changed";
                    return false;
                }
                // element-level picture
                const RankOneTensor t1p(t1.a, t1.b, t1.c ^ t2.c);
                const RankOneTensor t2p(t2.a, t2.b ^ t1.b, t2.c);
                std::map<std::tuple<uint64_t, uint64_t, uint64_t>, int> parity;
                auto toggle = [&parity](const RankOneTensor& t) {
                    if (!t.is_zero())
                        parity[{t.a.bits, t.b.bits, t.c.bits}] ^= 1;
                };
                for (const auto& t : before)
                    toggle(t);
                for (int id = 0; id < order; ++id) {
                    const GroupElement e = GroupElement::from_id(id);
                    toggle(act(e, t1));
                    toggle(act(e, t2));
                    toggle(act(e, t1p));
                    toggle(act(e, t2p));
                }
                for (const auto& t : after)
                    toggle(t);
                for (const auto& [key, p] : parity)
                    if (p) {
                        detail = "element-level multiset mismatch";
                        return false;
                    }
                ++local;
                ++checked;
            }
        }
    }
    std::ostringstream o;
    o << checked << " eligible orbit flips checked, " << seconds_since(t0) << " s";
    detail = o.str();
    return checked >= 1000 && seconds_since(t0) < 60.0;
}

bool criterion5(std::string& detail) {
    const auto t0 = Clock::now();
    const Scheme seed = make_start(3, Group::C3, parse_partition("{1,3},{2}"));
    int reached = 0;
    std::ostringstream o;
    for (uint64_t s = 1; s <= 5; ++s) {
        WalkParams params;
        params.limit = 100'000'000;
        params.plus_interval = 50'000;
        params.target_rank = 23;
        params.seed = s;
        SearchOptions options;
        options.workers = search_workers();
        options.max_seconds = 110;
        const WalkOutcome out = run_parallel(seed, params, options);
        o << "seed" << s << ":rank" << out.best_rank << " ";
        if (out.best_rank <= 23 && verify_f2(out.best)) {
            ++reached;
            if (g_found_schemes.size() < 2)
                g_found_schemes.push_back(out.best);
        }
    }
    o << seconds_since(t0) << " s";
    detail = o.str();
    return reached >= 3 && seconds_since(t0) < 600.0;
}

bool criterion6(std::string& detail) {
    const auto t0 = Clock::now();
    const Scheme seed = make_start(5, Group::C3, parse_partition("{1,5},{2,4},{3}"));
    constexpr double kBudgetSeconds = 3300;  // inside the one-hour criterion
    int best_seen = seed.rank();
    uint64_t walks = 0;
    for (uint64_t s = 1; seconds_since(t0) < kBudgetSeconds; ++s) {
        WalkParams params;
        params.limit = 100'000'000;  // flip limit 10^8
        params.plus_interval = 50'000;  // plus-transition parameter 5*10^4
        params.target_rank = 93;
        params.seed = s;
        SearchOptions options;
        options.workers = search_workers();
        options.max_seconds = kBudgetSeconds - seconds_since(t0);
        const WalkOutcome out = run_parallel(seed, params, options);
        ++walks;
        best_seen = std::min(best_seen, out.best_rank);
        if (out.best_rank <= 93) {
            if (!verify_f2(out.best)) {
                detail = "result failed verification";
                return false;
            }
            g_found_schemes.push_back(out.best);
            std::ostringstream o;
            o << "rank " << out.best_rank << " after " << walks << " restarts, "
              << seconds_since(t0) << " s";
            detail = o.str();
            return true;
        }
    }
    std::ostringstream o;
    o << "best rank " << best_seen << " after " << walks << " restarts within "
      << seconds_since(t0) << " s";
    detail = o.str();
    return false;
}

bool criterion7(std::string& detail) {
    const auto t0 = Clock::now();
    const int n = 6;
    // (a) the orbit of the all-diagonal tensor substitutes into three
    // block-diagonal tensors together with the full-diagonal one
    const BitMatrix full = diag(n, {1, 2, 3, 4, 5, 6});
    const BitMatrix d12 = diag(n, {1, 2});
    const BitMatrix d1234 = diag(n, {1, 2, 3, 4});
    const BitMatrix d3456 = diag(n, {3, 4, 5, 6});
    TensorF2 lhs(n);
    lhs.add(RankOneTensor(full, full, full));
    const RankOneTensor generator(d12, d1234, d3456);
    if (orbit_size(generator, Group::C3xZ2) != 6) {
        detail = "unexpected generator orbit size";
        return false;
    }
    for (int id = 0; id < 6; ++id)
        lhs.add(act(GroupElement::from_id(id), generator));
    TensorF2 rhs(n);
    rhs.add(RankOneTensor(diag(n, {1, 2}), diag(n, {1, 2}), diag(n, {1, 2})));
    rhs.add(RankOneTensor(diag(n, {3, 4}), diag(n, {3, 4}), diag(n, {3, 4})));
    rhs.add(RankOneTensor(diag(n, {5, 6}), diag(n, {5, 6}), diag(n, {5, 6})));
    if (!(lhs == rhs)) {
        detail = "substitution identity does not hold";
        return false;
    }
    // (b) rank accounting at the 6x6 scale
    if (153 != 25 * 6 + 3 || 231 % 6 != 153 % 6) {
        detail = "rank arithmetic mismatch";
        return false;
    }
    WalkState state(make_start(6, Group::C3xZ2, parse_partition("{1,2},{3,4},{5,6}")));
    Xoshiro256 rng(1);
    for (int i = 0; i < 100000; ++i) {
        if (i % 1000 == 999) {
            if (auto pair = state.sample_plus(rng))
                state.plus_transition(pair->first, pair->second);
        } else {
            auto pair = state.sample_flip(rng);
            if (!pair)
                break;
            state.flip(pair->first, pair->second);
        }
        if (state.rank() % 6 != 3) {
            detail = "rank left the residue class along the walk";
            return false;
        }
    }
    if (!verify_f2(state.to_scheme())) {
        detail = "walk state failed verification";
        return false;
    }
    std::ostringstream o;
    o << "substitution identity exact; rank stays ≡ 3 (mod 6) along a simulated walk, "
      << seconds_since(t0) << " s";
    detail = o.str();
    return true;
}

bool criterion8(std::string& detail) {
    std::ostringstream o;
    if (g_found_schemes.empty()) {
        detail = "no schemes were produced by the earlier criteria";
        return false;
    }
    for (const Scheme& s : g_found_schemes) {
        const auto t0 = Clock::now();
        LiftOptions options;
        options.max_order = 16;
        options.attempts = 8;
        const LiftResult result = lift(s, options);
        const double dt = seconds_since(t0);
        if (!result.scheme) {
            std::ostringstream fail;
            fail << "no integer lift for the rank-" << s.rank() << " scheme (order reached "
                 << result.max_order_reached << ")";
            detail = fail.str();
            return false;
        }
        if (!verify_int(*result.scheme)) {
            detail = "lifted scheme fails integer verification";
            return false;
        }
        if (dt >= 300.0) {
            std::ostringstream fail;
            fail << "lift of the rank-" << s.rank() << " scheme took " << dt << " s";
            detail = fail.str();
            return false;
        }
        o << "rank" << s.rank() << ":order" << result.log.back().order_reached << " in " << dt
          << "s ";
    }
    detail = o.str();
    return true;
}

bool criterion9(std::string& detail) {
    const auto t0 = Clock::now();
    // residual vanishes at the refined order after every accepted step
    for (const Scheme& s : {make_start(2, Group::C3xZ2, parse_partition("{1,2}")),
                            make_start(3, Group::C3, parse_partition("{1,3},{2}"))}) {
        // the seeds themselves are F2 schemes; walk their lift a few orders
        LiftState st = lift_state_from(s);
        const Gf2Matrix jac = brent_jacobian(st);
        HenselOptions options;
        options.jacobian = &jac;
        for (int step = 0; step < 4; ++step) {
            auto next = hensel_step(st, options);
            if (!next) {
                detail = "step unexpectedly infeasible";
                return false;
            }
            for (uint64_t v : brent_residual(*next, next->m))
                if (v) {
                    detail = "residual does not vanish at the refined order";
                    return false;
                }
            st = *next;
        }
    }
    // Jacobian columns match finite differences mod 4 divided by 2
    Xoshiro256 rng(23);
    for (int n : {2, 3}) {
        LiftState st;
        st.n = n;
        st.m = 2;
        st.k = 2;
        st.coeffs.assign(st.variables(), 0);
        for (auto& c : st.coeffs)
            c = rng.below(4);
        const Gf2Matrix jac = brent_jacobian(st);
        const auto base = brent_residual(st, 2);
        for (int trial = 0; trial < 40; ++trial) {
            const std::size_t v = rng.below(st.variables());
            LiftState moved = st;
            moved.coeffs[v] = (moved.coeffs[v] + 2) & 3;
            const auto shifted = brent_residual(moved, 2);
            for (std::size_t q = 0; q < base.size(); ++q) {
                const uint64_t diff = (shifted[q] - base[q]) & 3;
                if (diff % 2 != 0 || (diff >> 1) != uint64_t(jac.get(q, v))) {
                    detail = "finite difference disagrees with the jacobian";
                    return false;
                }
            }
        }
    }
    std::ostringstream o;
    o << "residual and jacobian checks exact, " << seconds_since(t0) << " s";
    detail = o.str();
    return true;
}

bool criterion10(std::string& detail) {
    const auto t0 = Clock::now();
    const FlipGraph graph =
        enumerate_component(make_start(2, Group::C3xZ2, parse_partition("{1,2}")));
    if (graph.truncated) {
        detail = "enumeration truncated";
        return false;
    }
    // edge symmetry and closure
    std::set<std::pair<uint32_t, uint32_t>> edges;
    for (std::size_t v = 0; v < graph.vertices.size(); ++v)
        for (uint32_t u : graph.vertices[v].neighbors) {
            const auto& back = graph.vertices[u].neighbors;
            if (std::find(back.begin(), back.end(), uint32_t(v)) == back.end()) {
                detail = "asymmetric edge";
                return false;
            }
            edges.emplace(std::min<uint32_t>(v, u), std::max<uint32_t>(v, u));
        }
    for (const auto& vertex : graph.vertices) {
        WalkState state(vertex.scheme);
        for (const auto& [oc1, oc2] : state.enumerate_flips()) {
            WalkState probe = state;
            const MutationReport report = probe.flip(oc1, oc2);
            if (report.applied && report.rank_delta == 0 &&
                !graph.index.count(scheme_key(probe.to_scheme()))) {
                detail = "closure violated";
                return false;
            }
        }
    }
    if (graph.vertices.empty() || !graph.vertices[0].is_seed) {
        detail = "seed vertex missing";
        return false;
    }
    bool neighbor_reaches = false;
    for (uint32_t u : graph.vertices[0].neighbors)
        neighbor_reaches |= graph.vertices[u].reaches_target;
    if (!neighbor_reaches) {
        detail = "seed has no reduction-reachable neighbor";
        return false;
    }
    if (!reflection_check(graph)) {
        detail = "reflection symmetry absent";
        return false;
    }
    std::ostringstream o;
    o << graph.vertices.size() << " vertices, " << edges.size()
      << " edges, reflection symmetric, " << seconds_since(t0) << " s";
    detail = o.str();
    return seconds_since(t0) < 60.0;
}

bool criterion11(std::string& detail) {
    const Scheme seed = make_start(5, Group::C3, parse_partition("{1,5},{2,4},{3}"));
    Xoshiro256 rng(99);
    WalkParams params;
    params.limit = 100'000'000;
    params.plus_interval = 50'000;
    params.target_rank = 1;  // unreachable: walks run their full length
    uint64_t flips = 0;
    const auto t0 = Clock::now();
    while (flips < 100'000'000) {  // accumulate across restarts if a walk strands
        WalkState state(seed);
        flips += random_walk(state, params, rng).flips;
    }
    const double dt = seconds_since(t0);
    const double rate = double(flips) / dt;
    std::ostringstream o;
    o << std::scientific << rate << " flips/s over " << double(flips) << " flips";
    if (rate < 1e7)
        o << " (below 1e7; see docs/performance.md)";
    detail = o.str();
    return rate >= 1e7;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<Criterion> criteria = {
        {1, "classic 2x2 fixture verifies over Z and F2 at rank 7", criterion1},
        {2, "diagonal-partition seeds verify with full orbits", criterion2},
        {3, "worked 2x2 flip sequence reaches rank 7", criterion3},
        {4, "orbit flips preserve sums and match the element picture", criterion4},
        {5, "3x3 search reaches rank 23 for most seeds", criterion5},
        {6, "5x5 search reaches rank <= 93 within the hour budget", criterion6},
        {7, "6x6 substitution identity and rank accounting", criterion7},
        {8, "searched schemes lift to exact integer schemes", criterion8},
        {9, "refinement steps vanish mod 2^(m+1); jacobian matches differences", criterion9},
        {10, "2x2 component enumeration: closed, symmetric, reducible neighbor", criterion10},
        {11, "single-thread flip rate at n=5 (soft)", criterion11, true},
    };

    std::set<int> selected;
    for (int i = 1; i < argc; ++i)
        selected.insert(std::atoi(argv[i]));

    bool all_ok = true;
    for (auto& c : criteria) {
        if (!selected.empty() && !selected.count(c.number))
            continue;
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const char* verdict = ok ? "PASS" : (c.soft ? "SOFT-FAIL" : "FAIL");
        std::printf("[%s] criterion %d: %s%s%s\n", verdict, c.number, c.description.c_str(),
                    detail.empty() ? "" : " -- ", detail.c_str());
        std::fflush(stdout);
        if (!ok && !c.soft)
            all_ok = false;
    }
    return all_ok ? 0 : 1;
}
