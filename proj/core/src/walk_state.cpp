#include "flipsym/walk_state.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace flipsym {

namespace {
std::size_t table_size_for(std::size_t items) {
    return std::bit_ceil(std::max<std::size_t>(64, items * 4));
}
}  // namespace

WalkState::WalkState(const Scheme& s) {
    if (s.n < 1 || s.n > kMaxDim)
        throw std::invalid_argument("scheme dimension must be between 1 and 8");
    n_ = s.n;
    group_ = s.group;
    order_ = group_order(group_);
    shift_ = 64 - n_ * n_;
    fixed_ = s.fixed;
    partition_ = s.partition;
    for (const auto& t : fixed_) {
        if (t.dim() != n_)
            throw std::invalid_argument("fixed tensor dimension mismatch");
        if (t.is_zero())
            throw std::invalid_argument("fixed tensor with a zero factor");
    }

    key_buckets_.assign(
        table_size_for(std::size_t(order_) * std::max<std::size_t>(s.orbits.size(), 4)), -1);
    key_mask_ = key_buckets_.size() - 1;

    orbits_.reserve(s.orbits.size());
    for (const auto& rep : s.orbits) {
        if (rep.dim() != n_)
            throw std::invalid_argument("orbit representative dimension mismatch");
        if (rep.is_zero())
            throw std::invalid_argument("orbit representative with a zero factor");
        std::array<uint64_t, 3> w{rep.a.bits, rep.b.bits, rep.c.bits};
        if (!full_orbit_words(w))
            throw std::invalid_argument("orbit representative whose orbit is smaller than |G|");
        create_orbit(w);
    }
    cancel_duplicates();
}

RankOneTensor WalkState::representative(uint32_t o) const {
    const auto& r = orbits_[o].rep;
    return RankOneTensor(BitMatrix(n_, r[0]), BitMatrix(n_, r[1]), BitMatrix(n_, r[2]));
}

RankOneTensor WalkState::occurrence_tensor(Occurrence oc) const {
    const auto t = materialize(oc);
    return RankOneTensor(BitMatrix(n_, t[0]), BitMatrix(n_, t[1]), BitMatrix(n_, t[2]));
}

BitMatrix WalkState::occurrence_key(Occurrence oc) const {
    return BitMatrix(n_, slot1_key(oc.orbit, oc.element));
}

Scheme WalkState::to_scheme() const {
    Scheme out;
    out.n = n_;
    out.group = group_;
    out.partition = partition_;
    out.fixed = fixed_;
    out.orbits.reserve(active_.size());
    for (uint32_t o : active_)
        out.orbits.push_back(representative(o));
    return out;
}

// --- record pool ---

int32_t WalkState::alloc_rec(uint64_t key) {
    int32_t idx;
    if (!free_recs_.empty()) {
        idx = free_recs_.back();
        free_recs_.pop_back();
    } else {
        recs_.emplace_back();
        idx = int32_t(recs_.size()) - 1;
    }
    KeyRec& r = recs_[idx];
    r.key = key;
    r.hash = mix64(key);
    r.entries.clear();  // keeps capacity from earlier lives
    r.distinct = 0;
    r.dup_pos = -1;
    return idx;
}

void WalkState::free_rec(int32_t idx) {
    free_recs_.push_back(idx);
}

// --- occurrence hash table ---

int32_t WalkState::key_find(uint64_t key) const {
    std::size_t b = mix64(key) & key_mask_;
    while (true) {
        const int32_t r = key_buckets_[b];
        if (r < 0)
            return -1;
        if (recs_[r].key == key)
            return r;
        b = (b + 1) & key_mask_;
    }
}

int32_t WalkState::key_find_or_create(uint64_t key) {
    if ((key_count_ + 1) * 2 > key_buckets_.size())
        key_grow();
    std::size_t b = mix64(key) & key_mask_;
    while (true) {
        const int32_t r = key_buckets_[b];
        if (r < 0) {
            const int32_t nr = alloc_rec(key);
            key_buckets_[b] = nr;
            ++key_count_;
            return nr;
        }
        if (recs_[r].key == key)
            return r;
        b = (b + 1) & key_mask_;
    }
}

void WalkState::key_erase(uint64_t key) {
    std::size_t b = mix64(key) & key_mask_;
    while (true) {
        const int32_t r = key_buckets_[b];
        assert(r >= 0 && "key_erase: key not present");
        if (recs_[r].key == key)
            break;
        b = (b + 1) & key_mask_;
    }
    --key_count_;
    std::size_t hole = b;
    std::size_t i = b;
    while (true) {
        i = (i + 1) & key_mask_;
        const int32_t v = key_buckets_[i];
        if (v < 0)
            break;
        const std::size_t home = recs_[v].hash & key_mask_;
        if (((i - home) & key_mask_) >= ((i - hole) & key_mask_)) {
            key_buckets_[hole] = v;
            hole = i;
        }
    }
    key_buckets_[hole] = -1;
}

void WalkState::key_grow() {
    std::vector<int32_t> old = std::move(key_buckets_);
    key_buckets_.assign(old.size() * 2, -1);
    key_mask_ = key_buckets_.size() - 1;
    for (int32_t r : old) {
        if (r < 0)
            continue;
        std::size_t b = recs_[r].hash & key_mask_;
        while (key_buckets_[b] >= 0)
            b = (b + 1) & key_mask_;
        key_buckets_[b] = r;
    }
}

// --- duplicate list ---

void WalkState::dup_add(int32_t rec) {
    recs_[rec].dup_pos = int32_t(dup_.size());
    dup_.push_back(rec);
}

void WalkState::dup_remove(int32_t rec) {
    const int32_t pos = recs_[rec].dup_pos;
    const int32_t last = dup_.back();
    dup_[pos] = last;
    recs_[last].dup_pos = pos;
    dup_.pop_back();
    recs_[rec].dup_pos = -1;
}

// --- orbit-level primitives ---

template <int ORDER>
std::array<uint64_t, 3> WalkState::materialize_t(Occurrence oc) const {
    const auto& rep = orbits_[oc.orbit].rep;
    const uint8_t* src = kSrcSlot[oc.element];
    std::array<uint64_t, 3> t{rep[src[0]], rep[src[1]], rep[src[2]]};
    if constexpr (ORDER == 6) {
        if (oc.element >= 3)
            for (auto& w : t)
                w = rev_bits(w);
    }
    return t;
}

template <int ORDER>
uint64_t WalkState::slot1_key_t(uint32_t o, int element) const {
    const uint64_t w = orbits_[o].rep[kSrcSlot[element][0]];
    if constexpr (ORDER == 6)
        return element >= 3 ? rev_bits(w) : w;
    return w;
}

template <int ORDER>
bool WalkState::full_orbit_t(const std::array<uint64_t, 3>& t) const {
    if constexpr (ORDER == 1)
        return true;
    if (t[0] == t[1] && t[1] == t[2])
        return false;
    if constexpr (ORDER == 6) {
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

template <int ORDER>
bool WalkState::same_orbit_t(const std::array<uint64_t, 3>& a,
                             const std::array<uint64_t, 3>& b) const {
    if (a == b)
        return true;
    if constexpr (ORDER == 1)
        return false;
    if (b[0] == a[2] && b[1] == a[0] && b[2] == a[1])
        return true;
    if (b[0] == a[1] && b[1] == a[2] && b[2] == a[0])
        return true;
    if constexpr (ORDER == 6) {
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

template <int ORDER>
void WalkState::attach_t(uint32_t o, int element) {
    const uint64_t key = slot1_key_t<ORDER>(o, element);
    const int32_t r = key_find_or_create(key);
    KeyRec& kr = recs_[r];
    Orbit& ob = orbits_[o];
    ob.occ_rec[element] = r;
    ob.occ_idx[element] = int32_t(kr.entries.size());
    kr.entries.push_back(Entry{o, uint8_t(element)});

    bool already = false;
    for (int k = 0; k < ORDER; ++k) {
        if (k == element)
            continue;
        if (ob.occ_rec[k] == r) {
            already = true;
            break;
        }
    }
    if (!already) {
        kr.distinct += 1;
        if (kr.distinct == 2)
            dup_add(r);
    }
}

template <int ORDER>
void WalkState::detach_t(uint32_t o, int element) {
    Orbit& ob = orbits_[o];
    const int32_t r = ob.occ_rec[element];
    const int32_t idx = ob.occ_idx[element];
    ob.occ_rec[element] = -1;
    ob.occ_idx[element] = -1;
    KeyRec& kr = recs_[r];
    const Entry moved = kr.entries.back();
    kr.entries.pop_back();
    if (std::size_t(idx) < kr.entries.size()) {  // removed entry was not the last
        kr.entries[idx] = moved;
        orbits_[moved.orbit].occ_idx[moved.element] = idx;
    }

    bool still = false;
    for (int k = 0; k < ORDER; ++k) {
        if (ob.occ_rec[k] == r) {
            still = true;
            break;
        }
    }
    if (!still) {
        if (kr.distinct == 2)
            dup_remove(r);
        kr.distinct -= 1;
    }
    if (kr.entries.empty()) {
        key_erase(kr.key);
        free_rec(r);
    }
}

template <int ORDER>
uint32_t WalkState::create_orbit_t(const std::array<uint64_t, 3>& rep) {
    uint32_t o;
    if (!free_orbits_.empty()) {
        o = free_orbits_.back();
        free_orbits_.pop_back();
    } else {
        o = uint32_t(orbits_.size());
        orbits_.emplace_back();
    }
    Orbit& ob = orbits_[o];
    ob.rep = rep;
    ob.occ_rec.fill(-1);
    ob.occ_idx.fill(-1);
    ob.active_pos = int32_t(active_.size());
    active_.push_back(o);
    for (int e = 0; e < ORDER; ++e)
        attach_t<ORDER>(o, e);
    return o;
}

template <int ORDER>
void WalkState::destroy_orbit_t(uint32_t o) {
    for (int e = 0; e < ORDER; ++e)
        if (orbits_[o].occ_rec[e] >= 0)
            detach_t<ORDER>(o, e);
    const int32_t pos = orbits_[o].active_pos;
    const uint32_t last = active_.back();
    active_[pos] = last;
    orbits_[last].active_pos = pos;
    active_.pop_back();
    orbits_[o].active_pos = -1;
    free_orbits_.push_back(o);
}

template <int ORDER>
int WalkState::update_orbit_slot_t(Occurrence oc, int t_slot, uint64_t new_word) {
    const uint32_t o = oc.orbit;
    const int s = kSrcSlot[oc.element][t_slot];
    uint64_t w = new_word;
    if constexpr (ORDER == 6)
        if (oc.element >= 3)
            w = rev_bits(new_word);
    const int er = kElementOfSlot[s];
    if (er < ORDER)
        detach_t<ORDER>(o, er);
    if constexpr (ORDER == 6)
        detach_t<ORDER>(o, er + 3);
    orbits_[o].rep[s] = w;
    if (er < ORDER)
        attach_t<ORDER>(o, er);
    if constexpr (ORDER == 6)
        attach_t<ORDER>(o, er + 3);
    return er < ORDER ? er : 0;  // any record of o works as a duplicate-scan hint
}

template <int ORDER>
int WalkState::resolve_duplicate_t(uint32_t o, int element_hint) {
    if (!orbit_active(o))
        return 0;
    const int32_t r = orbits_[o].occ_rec[element_hint];
    const KeyRec& kr = recs_[r];
    if (kr.distinct < 2)
        return 0;
    const auto& rep = orbits_[o].rep;
    uint32_t partner = o;
    for (const Entry& en : kr.entries) {
        if (en.orbit != o && same_orbit_t<ORDER>(rep, orbits_[en.orbit].rep)) {
            partner = en.orbit;
            break;
        }
    }
    if (partner == o)
        return 0;
    destroy_orbit_t<ORDER>(partner);
    destroy_orbit_t<ORDER>(o);
    return 2;
}

// Runtime-order wrappers for construction and the cold paths.

void WalkState::attach(uint32_t o, int element) {
    switch (order_) {
        case 3: attach_t<3>(o, element); break;
        case 6: attach_t<6>(o, element); break;
        default: attach_t<1>(o, element); break;
    }
}

void WalkState::detach(uint32_t o, int element) {
    switch (order_) {
        case 3: detach_t<3>(o, element); break;
        case 6: detach_t<6>(o, element); break;
        default: detach_t<1>(o, element); break;
    }
}

uint32_t WalkState::create_orbit(const std::array<uint64_t, 3>& rep) {
    switch (order_) {
        case 3: return create_orbit_t<3>(rep);
        case 6: return create_orbit_t<6>(rep);
        default: return create_orbit_t<1>(rep);
    }
}

void WalkState::destroy_orbit(uint32_t o) {
    switch (order_) {
        case 3: destroy_orbit_t<3>(o); break;
        case 6: destroy_orbit_t<6>(o); break;
        default: destroy_orbit_t<1>(o); break;
    }
}

// --- mutations ---

template <int ORDER>
MutationReport WalkState::flip_t(Occurrence oc1, Occurrence oc2) {
    if (!orbit_active(oc1.orbit) || !orbit_active(oc2.orbit))
        throw std::invalid_argument("flip: inactive orbit");
    if (oc1.orbit == oc2.orbit)
        throw std::invalid_argument("flip: occurrences from the same orbit");
    if (oc1.element >= ORDER || oc2.element >= ORDER)
        throw std::invalid_argument("flip: group element out of range");
    const auto t1 = materialize_t<ORDER>(oc1);
    const auto t2 = materialize_t<ORDER>(oc2);
    if (t1[0] != t2[0])
        throw std::invalid_argument("flip: occurrences do not share a factor value");

    const uint64_t nc = t1[2] ^ t2[2];
    const uint64_t nb = t2[1] ^ t1[1];
    const bool z1 = nc == 0;
    const bool z2 = nb == 0;
    assert(!(z1 && z2) && "identical aligned tensors imply duplicate orbits");

    if (!z1 && !full_orbit_t<ORDER>({t1[0], t1[1], nc}))
        return MutationReport{};
    if (!z2 && !full_orbit_t<ORDER>({t2[0], nb, t2[2]}))
        return MutationReport{};

    MutationReport report;
    report.applied = true;
    const int before = int(active_.size());

    int hint1 = 0, hint2 = 0;
    if (z1) {
        destroy_orbit_t<ORDER>(oc1.orbit);
        report.zeros_removed += 1;
    } else {
        hint1 = update_orbit_slot_t<ORDER>(oc1, 2, nc);
    }
    if (z2) {
        destroy_orbit_t<ORDER>(oc2.orbit);
        report.zeros_removed += 1;
    } else {
        hint2 = update_orbit_slot_t<ORDER>(oc2, 1, nb);
    }
    if (!z1)
        report.duplicates_cancelled += resolve_duplicate_t<ORDER>(oc1.orbit, hint1);
    if (!z2)
        report.duplicates_cancelled += resolve_duplicate_t<ORDER>(oc2.orbit, hint2);

    report.rank_delta = (int(active_.size()) - before) * ORDER;
    return report;
}

MutationReport WalkState::flip(Occurrence oc1, Occurrence oc2) {
    switch (order_) {
        case 3: return flip_t<3>(oc1, oc2);
        case 6: return flip_t<6>(oc1, oc2);
        default: return flip_t<1>(oc1, oc2);
    }
}

template <int ORDER>
MutationReport WalkState::plus_t(Occurrence oc1, Occurrence oc2) {
    if (!orbit_active(oc1.orbit) || !orbit_active(oc2.orbit))
        throw std::invalid_argument("plus_transition: inactive orbit");
    if (oc1.orbit == oc2.orbit)
        throw std::invalid_argument("plus_transition: occurrences from the same orbit");
    if (oc1.element >= ORDER || oc2.element >= ORDER)
        throw std::invalid_argument("plus_transition: group element out of range");
    const auto t1 = materialize_t<ORDER>(oc1);
    const auto t2 = materialize_t<ORDER>(oc2);

    const uint64_t na = t1[0] ^ t2[0];
    const uint64_t nc = t1[2] ^ t2[2];
    const uint64_t nb = t2[1] ^ t1[1];
    const bool z1 = na == 0;
    const bool z2 = nc == 0;
    const bool z3 = nb == 0;
    assert(!(z1 && z2 && z3) && "identical aligned tensors imply duplicate orbits");

    const std::array<uint64_t, 3> out2{t2[0], t1[1], nc};
    if (!z1 && !full_orbit_t<ORDER>({na, t1[1], t1[2]}))
        return MutationReport{};
    if (!z2 && !full_orbit_t<ORDER>(out2))
        return MutationReport{};
    if (!z3 && !full_orbit_t<ORDER>({t2[0], nb, t2[2]}))
        return MutationReport{};

    MutationReport report;
    report.applied = true;
    const int before = int(active_.size());

    int hint1 = 0, hint2 = 0;
    if (z1) {
        destroy_orbit_t<ORDER>(oc1.orbit);
        report.zeros_removed += 1;
    } else {
        hint1 = update_orbit_slot_t<ORDER>(oc1, 0, na);
    }
    if (z3) {
        destroy_orbit_t<ORDER>(oc2.orbit);
        report.zeros_removed += 1;
    } else {
        hint2 = update_orbit_slot_t<ORDER>(oc2, 1, nb);
    }
    if (!z1)
        report.duplicates_cancelled += resolve_duplicate_t<ORDER>(oc1.orbit, hint1);
    if (!z3)
        report.duplicates_cancelled += resolve_duplicate_t<ORDER>(oc2.orbit, hint2);
    if (!z2) {
        const uint32_t fresh = create_orbit_t<ORDER>(out2);
        report.duplicates_cancelled += resolve_duplicate_t<ORDER>(fresh, 0);
    } else {
        report.zeros_removed += 1;
    }

    report.rank_delta = (int(active_.size()) - before) * ORDER;
    return report;
}

MutationReport WalkState::plus_transition(Occurrence oc1, Occurrence oc2) {
    switch (order_) {
        case 3: return plus_t<3>(oc1, oc2);
        case 6: return plus_t<6>(oc1, oc2);
        default: return plus_t<1>(oc1, oc2);
    }
}

int WalkState::cancel_duplicates() {
    int removed = 0;
    std::map<std::array<uint64_t, 3>, uint32_t> seen;
    const std::vector<uint32_t> snapshot = active_;
    for (uint32_t o : snapshot) {
        if (!orbit_active(o))
            continue;
        auto [it, fresh] = seen.try_emplace(compute_canon(orbits_[o].rep), o);
        if (!fresh) {
            destroy_orbit(it->second);
            destroy_orbit(o);
            seen.erase(it);
            removed += 2;
        }
    }
    return removed;
}

// --- sampling ---

std::optional<std::pair<Occurrence, Occurrence>> WalkState::sample_flip(Xoshiro256& rng,
                                                                        int max_attempts) const {
    if (dup_.empty())
        return std::nullopt;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        const KeyRec& r = recs_[dup_[rng.below(dup_.size())]];
        const uint64_t len = r.entries.size();
        // one draw feeds both positions; records are far below 2^32 entries
        const uint64_t word = rng();
        const uint64_t i = ((word >> 32) * len) >> 32;
        uint64_t j = ((word & 0xFFFFFFFFull) * (len - 1)) >> 32;
        if (j >= i)
            ++j;
        const Entry e1 = r.entries[i];
        const Entry e2 = r.entries[j];
        if (e1.orbit != e2.orbit)
            return std::make_pair(Occurrence{e1.orbit, e1.element},
                                  Occurrence{e2.orbit, e2.element});
    }
    return std::nullopt;
}

std::optional<std::pair<Occurrence, Occurrence>> WalkState::sample_plus(Xoshiro256& rng) const {
    if (active_.size() < 2)
        return std::nullopt;
    const uint64_t ia = rng.below(active_.size());
    uint64_t ib = rng.below(active_.size() - 1);
    if (ib >= ia)
        ++ib;
    const uint8_t e1 = uint8_t(rng.below(order_));
    const uint8_t e2 = uint8_t(rng.below(order_));
    return std::make_pair(Occurrence{active_[ia], e1}, Occurrence{active_[ib], e2});
}

std::vector<std::pair<Occurrence, Occurrence>> WalkState::enumerate_flips() const {
    std::vector<std::tuple<uint64_t, uint32_t, uint8_t, uint32_t, uint8_t>> found;
    for (int32_t r : key_buckets_) {
        if (r < 0)
            continue;
        const KeyRec& kr = recs_[r];
        if (kr.distinct < 2)
            continue;
        for (const Entry& e1 : kr.entries)
            for (const Entry& e2 : kr.entries)
                if (e1.orbit != e2.orbit)
                    found.emplace_back(kr.key, e1.orbit, e1.element, e2.orbit, e2.element);
    }
    std::sort(found.begin(), found.end());
    std::vector<std::pair<Occurrence, Occurrence>> out;
    out.reserve(found.size());
    for (const auto& [key, o1, e1, o2, e2] : found)
        out.emplace_back(Occurrence{o1, e1}, Occurrence{o2, e2});
    return out;
}

// --- reconstruction and audits ---

void WalkState::rebuild_index() {
    recs_.clear();
    free_recs_.clear();
    dup_.clear();
    std::fill(key_buckets_.begin(), key_buckets_.end(), -1);
    key_count_ = 0;
    for (uint32_t o : active_) {
        orbits_[o].occ_rec.fill(-1);
        orbits_[o].occ_idx.fill(-1);
    }
    for (uint32_t o : active_)
        for (int e = 0; e < order_; ++e)
            attach(o, e);
    std::set<std::array<uint64_t, 3>> seen;
    for (uint32_t o : active_)
        if (!seen.insert(compute_canon(orbits_[o].rep)).second)
            throw std::logic_error("rebuild_index: duplicate orbits present");
}

bool WalkState::check_index(std::string* why) const {
    auto fail = [&](const std::string& msg) {
        if (why)
            *why = msg;
        return false;
    };
    std::size_t live_entries = 0;
    for (uint32_t o : active_) {
        const Orbit& ob = orbits_[o];
        if (ob.active_pos < 0 || active_[ob.active_pos] != o)
            return fail("active position mismatch");
        if (!full_orbit_words(ob.rep))
            return fail("stored orbit is not full");
        for (int e = 0; e < 6; ++e) {
            if (e >= order_) {
                if (ob.occ_rec[e] != -1)
                    return fail("occurrence outside group order");
                continue;
            }
            const int32_t r = ob.occ_rec[e];
            const int32_t idx = ob.occ_idx[e];
            if (r < 0 || idx < 0)
                return fail("missing occurrence entry");
            const KeyRec& kr = recs_[r];
            if (std::size_t(idx) >= kr.entries.size())
                return fail("occurrence index out of range");
            if (kr.entries[idx].orbit != o || kr.entries[idx].element != e)
                return fail("occurrence entry mismatch");
            if (kr.key != slot1_key(o, e))
                return fail("occurrence key mismatch");
            ++live_entries;
        }
    }
    {
        std::set<std::array<uint64_t, 3>> seen;
        for (uint32_t o : active_)
            if (!seen.insert(compute_canon(orbits_[o].rep)).second)
                return fail("two active orbits share a canonical representative");
    }

    std::size_t table_recs = 0;
    std::size_t table_len = 0;
    std::size_t dup_members = 0;
    for (int32_t r : key_buckets_) {
        if (r < 0)
            continue;
        ++table_recs;
        const KeyRec& kr = recs_[r];
        if (kr.entries.empty())
            return fail("empty record kept in table");
        std::set<uint32_t> orbit_set;
        for (const Entry& en : kr.entries) {
            if (!orbit_active(en.orbit))
                return fail("occurrence of an inactive orbit");
            if (orbits_[en.orbit].occ_rec[en.element] != r)
                return fail("entry back-reference mismatch");
            if (slot1_key(en.orbit, en.element) != kr.key)
                return fail("listed occurrence has wrong key");
            orbit_set.insert(en.orbit);
        }
        if (orbit_set.size() != kr.distinct)
            return fail("record distinct-orbit count mismatch");
        const bool in_dup = kr.dup_pos >= 0;
        if (in_dup != (kr.distinct >= 2))
            return fail("duplicate-list membership mismatch");
        if (in_dup) {
            if (std::size_t(kr.dup_pos) >= dup_.size() || dup_[kr.dup_pos] != r)
                return fail("duplicate-list position mismatch");
            ++dup_members;
        }
        table_len += kr.entries.size();
    }
    if (table_recs != key_count_)
        return fail("key table count mismatch");
    if (table_len != live_entries)
        return fail("total occurrence count mismatch");
    if (dup_members != dup_.size())
        return fail("duplicate list size mismatch");
    return true;
}

std::string WalkState::index_signature() const {
    std::vector<std::string> lines;
    for (int32_t r : key_buckets_) {
        if (r < 0)
            continue;
        const KeyRec& kr = recs_[r];
        std::vector<std::pair<uint32_t, int>> occs;
        for (const Entry& en : kr.entries)
            occs.emplace_back(en.orbit, en.element);
        std::sort(occs.begin(), occs.end());
        std::ostringstream line;
        line << std::hex << kr.key << std::dec << " len=" << kr.entries.size()
             << " distinct=" << kr.distinct << " dup=" << (kr.dup_pos >= 0 ? 1 : 0) << " occs=";
        for (auto [o, e] : occs)
            line << '(' << o << ',' << e << ')';
        lines.push_back(line.str());
    }
    std::sort(lines.begin(), lines.end());
    std::string out;
    for (const auto& l : lines) {
        out += l;
        out += '\n';
    }
    return out;
}

}  // namespace flipsym
