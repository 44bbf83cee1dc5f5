#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flipsym/rng.hpp"
#include "flipsym/scheme.hpp"

namespace flipsym {

// One slot-1 occurrence of an orbit: the first factor of
// act(element, representative) equals the occurrence's key value.
struct Occurrence {
    uint32_t orbit = 0;
    uint8_t element = 0;
};

struct MutationReport {
    bool applied = false;       // false: rejected, state unchanged
    int rank_delta = 0;         // always a multiple of |G|
    int zeros_removed = 0;      // orbits deleted because a factor became zero
    int duplicates_cancelled = 0;  // orbits deleted in canonical-duplicate pairs
};

// The mutable scheme during a walk.  Orbits are stored as representatives
// only; the other |G|-1 elements are implicit in the group action.  Three
// incremental indexes are maintained across mutations:
//
//   * an occurrence table keyed by factor value: for every group element g
//     of every orbit, the slot-1 factor of act(g, rep) maps back to
//     (orbit, g), so each orbit contributes exactly |G| occurrences;
//   * a duplicate list of the factor values whose occurrences span two or
//     more distinct orbits (the values offering flips), supporting O(1)
//     insertion, deletion and uniform sampling;
//   * a map from canonical orbit representative to orbit id, used to
//     cancel pairs of identical orbits (their F2 contribution is zero).
//
// A flip changes one factor of each touched orbit, so index maintenance is
// O(1) hash work per mutation.  Not safe for concurrent mutation; walks
// own their state exclusively.
class WalkState {
public:
    explicit WalkState(const Scheme& s);

    int dim() const { return n_; }
    Group group() const { return group_; }
    int order() const { return order_; }
    int rank() const { return int(fixed_.size()) + order_ * int(active_.size()); }
    std::size_t orbit_count() const { return active_.size(); }
    const std::vector<uint32_t>& active_orbits() const { return active_; }
    const std::vector<RankOneTensor>& fixed() const { return fixed_; }

    bool orbit_active(uint32_t o) const {
        return o < orbits_.size() && orbits_[o].active_pos >= 0;
    }
    RankOneTensor representative(uint32_t o) const;
    RankOneTensor occurrence_tensor(Occurrence oc) const;
    BitMatrix occurrence_key(Occurrence oc) const;

    Scheme to_scheme() const;

    // Replaces the aligned tensors t1 = X(x)B(x)C and t2 = X(x)B'(x)C' by
    // X(x)B(x)(C+C') and X(x)(B'+B)(x)C'.  An orbit whose updated factor
    // is zero is deleted (rank drops by |G|); canonical duplicates are
    // cancelled in pairs afterwards.  Rejected without touching the state
    // if a surviving output would have an orbit smaller than |G|.
    MutationReport flip(Occurrence oc1, Occurrence oc2);

    // Replaces aligned t1 = A(x)B(x)C and t2 = A'(x)B'(x)C' by the three
    // tensors (A+A')(x)B(x)C, A'(x)B(x)(C+C'), A'(x)(B'+B)(x)C'.  Zero
    // outputs are skipped; duplicate pairs cancelled; degenerate-orbit
    // outputs reject the whole transition.
    MutationReport plus_transition(Occurrence oc1, Occurrence oc2);

    // Deletes pairs of orbits sharing a canonical representative; returns
    // the number of orbits removed.  The expanded F2 sum is unchanged.
    int cancel_duplicates();

    // Uniform factor value from the duplicate list, then a uniform ordered
    // pair of its occurrences; pairs within one orbit are rejected and the
    // draw repeated, up to max_attempts.  Empty result: no flips found.
    std::optional<std::pair<Occurrence, Occurrence>> sample_flip(Xoshiro256& rng,
                                                                 int max_attempts = 64) const;

    // Uniform ordered pair of distinct orbits with uniform group elements.
    std::optional<std::pair<Occurrence, Occurrence>> sample_plus(Xoshiro256& rng) const;

    std::size_t flippable_value_count() const { return dup_.size(); }

    // Every ordered cross-orbit occurrence pair sharing a factor value, in
    // a deterministic order (exhaustive enumeration support).
    std::vector<std::pair<Occurrence, Occurrence>> enumerate_flips() const;

    // Reconstructs all indexes from the orbit table (used after loading);
    // the result is equivalent to incrementally maintained indexes.
    void rebuild_index();

    // Full consistency audit of every index invariant (test support).
    bool check_index(std::string* why = nullptr) const;

    // Order-independent rendering of the index contents, for comparing a
    // rebuilt index against an incrementally maintained one.
    std::string index_signature() const;

private:
    struct Orbit {
        std::array<uint64_t, 3> rep{};
        std::array<int32_t, 6> occ_rec{-1, -1, -1, -1, -1, -1};
        std::array<int32_t, 6> occ_idx{-1, -1, -1, -1, -1, -1};
        int32_t active_pos = -1;
    };

    // Source rep slot of tensor slot i under group element e, i.e.
    // (i - rot(e)) mod 3; elements 3..5 additionally mirror every factor.
    static constexpr uint8_t kSrcSlot[6][3] = {{0, 1, 2}, {2, 0, 1}, {1, 2, 0},
                                               {0, 1, 2}, {2, 0, 1}, {1, 2, 0}};
    // Element (mirror-free) whose slot-1 key reads rep slot s.
    static constexpr uint8_t kElementOfSlot[3] = {0, 2, 1};
    struct Entry {
        uint32_t orbit;
        uint8_t element;
    };
    // Occurrences live in a contiguous array per key record (swap-remove
    // deletion), so sampling a pair is two direct reads.  Freed records
    // keep their array capacity for reuse.
    struct KeyRec {
        uint64_t key;
        uint64_t hash;  // mix64(key), kept alongside to avoid re-mixing
        std::vector<Entry> entries;
        uint32_t distinct;
        int32_t dup_pos;
    };

    uint64_t rev_bits(uint64_t w) const { return bit_reverse64(w) >> shift_; }

    std::array<uint64_t, 3> materialize(Occurrence oc) const {
        const auto& rep = orbits_[oc.orbit].rep;
        const uint8_t* src = kSrcSlot[oc.element];
        std::array<uint64_t, 3> t{rep[src[0]], rep[src[1]], rep[src[2]]};
        if (oc.element >= 3)
            for (auto& w : t)
                w = rev_bits(w);
        return t;
    }

    uint64_t slot1_key(uint32_t o, int element) const {
        const uint64_t w = orbits_[o].rep[kSrcSlot[element][0]];
        return element >= 3 ? rev_bits(w) : w;
    }

    bool full_orbit_words(const std::array<uint64_t, 3>& t) const {
        if (order_ == 1)
            return true;
        if (t[0] == t[1] && t[1] == t[2])
            return false;
        if (order_ == 6) {
            const uint64_t ra = rev_bits(t[0]);
            const uint64_t rb = rev_bits(t[1]);
            const uint64_t rc = rev_bits(t[2]);
            if (ra == t[0] && rb == t[1] && rc == t[2])
                return false;
            if (rc == t[0] && ra == t[1] && rb == t[2])
                return false;
            if (rb == t[0] && rc == t[1] && ra == t[2])
                return false;
        }
        return true;
    }

    // True iff the two representatives generate the same orbit.
    bool same_orbit_words(const std::array<uint64_t, 3>& a,
                          const std::array<uint64_t, 3>& b) const {
        if (a == b)
            return true;
        if (order_ == 1)
            return false;
        if (b[0] == a[2] && b[1] == a[0] && b[2] == a[1])
            return true;
        if (b[0] == a[1] && b[1] == a[2] && b[2] == a[0])
            return true;
        if (order_ == 6) {
            const std::array<uint64_t, 3> m{rev_bits(a[0]), rev_bits(a[1]), rev_bits(a[2])};
            if (b == m)
                return true;
            if (b[0] == m[2] && b[1] == m[0] && b[2] == m[1])
                return true;
            if (b[0] == m[1] && b[1] == m[2] && b[2] == m[0])
                return true;
        }
        return false;
    }

    std::array<uint64_t, 3> compute_canon(const std::array<uint64_t, 3>& r) const {
        std::array<uint64_t, 3> best = r;
        auto consider = [&best](std::array<uint64_t, 3> cand) {
            if (cand < best)
                best = cand;
        };
        if (order_ >= 3) {
            consider({r[2], r[0], r[1]});
            consider({r[1], r[2], r[0]});
        }
        if (order_ == 6) {
            const std::array<uint64_t, 3> m{rev_bits(r[0]), rev_bits(r[1]), rev_bits(r[2])};
            consider(m);
            consider({m[2], m[0], m[1]});
            consider({m[1], m[2], m[0]});
        }
        return best;
    }

    // --- record pool ---
    int32_t alloc_rec(uint64_t key);
    void free_rec(int32_t idx);

    // --- occurrence hash table (key -> record) ---
    int32_t key_find(uint64_t key) const;
    int32_t key_find_or_create(uint64_t key);
    void key_erase(uint64_t key);
    void key_grow();

    // --- duplicate list ---
    void dup_add(int32_t rec);
    void dup_remove(int32_t rec);

    // --- orbit-level primitives ---
    // The mutation path is instantiated per group order so the per-element
    // scans unroll and the C3 path carries no mirror branches.
    template <int ORDER> std::array<uint64_t, 3> materialize_t(Occurrence oc) const;
    template <int ORDER> uint64_t slot1_key_t(uint32_t o, int element) const;
    template <int ORDER> bool full_orbit_t(const std::array<uint64_t, 3>& t) const;
    template <int ORDER> bool same_orbit_t(const std::array<uint64_t, 3>& a,
                                           const std::array<uint64_t, 3>& b) const;
    template <int ORDER> void attach_t(uint32_t o, int element);
    template <int ORDER> void detach_t(uint32_t o, int element);
    template <int ORDER> uint32_t create_orbit_t(const std::array<uint64_t, 3>& rep);
    template <int ORDER> void destroy_orbit_t(uint32_t o);
    // Rewrites the rep slot holding tensor slot t_slot seen through
    // oc.element; returns the element id whose occurrence key changed.
    template <int ORDER> int update_orbit_slot_t(Occurrence oc, int t_slot, uint64_t new_word);
    // Duplicate orbits share every occurrence key, so a single record of o
    // is scanned for another orbit generating the same orbit set; such a
    // pair is cancelled.  Returns the number of orbits removed.
    template <int ORDER> int resolve_duplicate_t(uint32_t o, int element_hint);
    template <int ORDER> MutationReport flip_t(Occurrence oc1, Occurrence oc2);
    template <int ORDER> MutationReport plus_t(Occurrence oc1, Occurrence oc2);

    // Runtime-order wrappers for the cold paths.
    void attach(uint32_t o, int element);
    void detach(uint32_t o, int element);
    uint32_t create_orbit(const std::array<uint64_t, 3>& rep);
    void destroy_orbit(uint32_t o);

    int n_ = 0;
    Group group_ = Group::None;
    int order_ = 1;
    int shift_ = 0;  // 64 - n^2

    std::vector<RankOneTensor> fixed_;
    std::optional<DiagonalPartition> partition_;

    std::vector<Orbit> orbits_;
    std::vector<uint32_t> free_orbits_;
    std::vector<uint32_t> active_;

    std::vector<KeyRec> recs_;
    std::vector<int32_t> free_recs_;

    std::vector<int32_t> key_buckets_;
    uint64_t key_mask_ = 0;
    std::size_t key_count_ = 0;

    std::vector<int32_t> dup_;
};

}  // namespace flipsym
