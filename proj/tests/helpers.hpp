#pragma once

// Shared fixtures and independent oracles for the test suites.  Everything
// here is built from first principles (explicit tensors, brute-force
// enumeration) so the main code paths can be checked against it.

#include <algorithm>
#include <map>
#include <vector>

#include "flipsym/int_scheme.hpp"
#include "flipsym/rng.hpp"
#include "flipsym/scheme.hpp"
#include "flipsym/search.hpp"
#include "flipsym/seeds.hpp"
#include "flipsym/tensor_f2.hpp"
#include "flipsym/walk_state.hpp"

namespace flipsym::test {

// 1-based wrappers matching the usual a_{i,j} notation.
inline BitMatrix E(int n, int i, int j) {
    return BitMatrix::basis(n, i - 1, j - 1);
}

// The classic 2x2 rank-7 decomposition over F2: the invariant tensor
// (a11+a22)(b11+b22)(c11+c22) plus the orbit of a11 (x) (b12+b22) (x) (c21+c22).
inline Scheme strassen_f2() {
    Scheme s;
    s.n = 2;
    s.group = Group::C3xZ2;
    s.partition = DiagonalPartition{{{1, 2}}};
    s.fixed.emplace_back(BitMatrix(2, 0x9), BitMatrix(2, 0x9), BitMatrix(2, 0x9));
    s.orbits.emplace_back(BitMatrix(2, 0x1), BitMatrix(2, 0xa), BitMatrix(2, 0xc));
    return s;
}

inline IntMatrix int_mat(int n, std::vector<int64_t> entries) {
    IntMatrix m(n);
    m.v = std::move(entries);
    return m;
}

// Same decomposition with its integer signs.
inline IntScheme strassen_z() {
    IntScheme s;
    s.n = 2;
    s.group = Group::C3xZ2;
    s.partition = DiagonalPartition{{{1, 2}}};
    s.fixed.push_back({int_mat(2, {1, 0, 0, 1}), int_mat(2, {1, 0, 0, 1}), int_mat(2, {1, 0, 0, 1})});
    s.orbits.push_back({int_mat(2, {1, 0, 0, 0}), int_mat(2, {0, 1, 0, -1}), int_mat(2, {0, 0, 1, 1})});
    return s;
}

// All seven summands written out explicitly, mod 2.
inline std::vector<RankOneTensor> strassen_terms_f2() {
    auto add = [](BitMatrix a, BitMatrix b) { return a ^ b; };
    const int n = 2;
    std::vector<RankOneTensor> t;
    t.emplace_back(add(E(n, 1, 1), E(n, 2, 2)), add(E(n, 1, 1), E(n, 2, 2)),
                   add(E(n, 1, 1), E(n, 2, 2)));
    t.emplace_back(E(n, 1, 1), add(E(n, 1, 2), E(n, 2, 2)), add(E(n, 2, 1), E(n, 2, 2)));
    t.emplace_back(add(E(n, 2, 1), E(n, 2, 2)), E(n, 1, 1), add(E(n, 1, 2), E(n, 2, 2)));
    t.emplace_back(add(E(n, 1, 2), E(n, 2, 2)), add(E(n, 2, 1), E(n, 2, 2)), E(n, 1, 1));
    t.emplace_back(E(n, 2, 2), add(E(n, 2, 1), E(n, 1, 1)), add(E(n, 1, 1), E(n, 1, 2)));
    t.emplace_back(add(E(n, 1, 1), E(n, 1, 2)), E(n, 2, 2), add(E(n, 2, 1), E(n, 1, 1)));
    t.emplace_back(add(E(n, 2, 1), E(n, 1, 1)), add(E(n, 1, 1), E(n, 1, 2)), E(n, 2, 2));
    return t;
}

// Oracle: XOR-sum of explicit tensors, accumulated independently of
// Scheme/expand.
inline TensorF2 sum_of(int n, const std::vector<RankOneTensor>& tensors) {
    TensorF2 acc(n);
    for (const auto& t : tensors)
        acc.add(t);
    return acc;
}

// Multiset-mod-2 of tensors: the triples that appear an odd number of
// times, sorted.  Zero tensors are dropped.
inline std::vector<RankOneTensor> odd_multiset(const std::vector<RankOneTensor>& tensors) {
    std::map<std::tuple<uint64_t, uint64_t, uint64_t>, std::pair<RankOneTensor, int>> counts;
    for (const auto& t : tensors) {
        if (t.is_zero())
            continue;
        auto key = std::make_tuple(t.a.bits, t.b.bits, t.c.bits);
        auto [it, fresh] = counts.try_emplace(key, t, 0);
        it->second.second ^= 1;
    }
    std::vector<RankOneTensor> out;
    for (const auto& [key, tc] : counts)
        if (tc.second)
            out.push_back(tc.first);
    return out;
}

// Outcome of checking one orbit flip against the element-level picture:
// the expansion after the flip must equal, as a multiset mod 2, the
// expansion before with each aligned tensor pair (g.t1, g.t2) replaced by
// its flipped images, and the expanded sum must be unchanged.
enum class FlipCheck { Rejected, Ok, SumChanged, MultisetMismatch };

inline FlipCheck check_flip_elementwise(WalkState& state, Occurrence oc1, Occurrence oc2) {
    const int order = group_order(state.group());
    const RankOneTensor t1 = state.occurrence_tensor(oc1);
    const RankOneTensor t2 = state.occurrence_tensor(oc2);
    const Scheme before_scheme = state.to_scheme();
    const std::vector<RankOneTensor> before = expand(before_scheme);
    const TensorF2 sum_before = sum_of(before_scheme.n, before);

    const MutationReport report = state.flip(oc1, oc2);
    if (!report.applied)
        return FlipCheck::Rejected;

    const Scheme after_scheme = state.to_scheme();
    const std::vector<RankOneTensor> after = expand(after_scheme);
    if (!(sum_of(after_scheme.n, after) == sum_before))
        return FlipCheck::SumChanged;

    const RankOneTensor t1p(t1.a, t1.b, t1.c ^ t2.c);
    const RankOneTensor t2p(t2.a, t2.b ^ t1.b, t2.c);
    std::vector<RankOneTensor> toggled = before;
    for (int id = 0; id < order; ++id) {
        const GroupElement e = GroupElement::from_id(id);
        toggled.push_back(act(e, t1));
        toggled.push_back(act(e, t2));
        if (!t1p.is_zero())
            toggled.push_back(act(e, t1p));
        if (!t2p.is_zero())
            toggled.push_back(act(e, t2p));
    }
    if (odd_multiset(after) != odd_multiset(toggled))
        return FlipCheck::MultisetMismatch;
    return FlipCheck::Ok;
}

// Scrambles a seed scheme with `steps` random flips (and a plus-transition
// roughly every `plus_every` steps when stuck is unlikely), keeping the
// state valid.  For generating diverse test states.
inline WalkState scrambled_state(const Scheme& seed, uint64_t rng_seed, int steps,
                                 int plus_every = 0) {
    WalkState state(seed);
    Xoshiro256 rng(rng_seed);
    for (int i = 0; i < steps; ++i) {
        if (plus_every > 0 && i % plus_every == plus_every - 1) {
            if (auto pair = state.sample_plus(rng))
                state.plus_transition(pair->first, pair->second);
            continue;
        }
        auto pair = state.sample_flip(rng);
        if (!pair)
            break;
        state.flip(pair->first, pair->second);
    }
    return state;
}

}  // namespace flipsym::test
