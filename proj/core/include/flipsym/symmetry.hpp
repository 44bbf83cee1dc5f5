#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "flipsym/bitmatrix.hpp"

namespace flipsym {

// Invariance groups of a scheme.  C3 cyclically rotates the three tensor
// slots; the Z2 factor simultaneously reverses rows and columns of every
// factor matrix.  None is the trivial group (plain, unstructured schemes).
enum class Group : uint8_t { None = 0, C3 = 1, C3xZ2 = 2 };

inline constexpr int group_order(Group g) {
    switch (g) {
        case Group::None: return 1;
        case Group::C3: return 3;
        case Group::C3xZ2: return 6;
    }
    return 0;
}

const char* group_name(Group g);
std::optional<Group> parse_group(std::string_view name);

// rot in {0,1,2}: slot rotation exponent, rot=1 maps (A,B,C) to (C,A,B).
// mir in {0,1}: row/column reversal of every factor.  The two commute;
// composition adds rot mod 3 and mir mod 2.  Elements are numbered
// id = rot + 3*mir, so ids 0..order-1 enumerate the group.
struct GroupElement {
    uint8_t rot = 0;
    uint8_t mir = 0;

    constexpr uint8_t id() const { return uint8_t(rot + 3 * mir); }
    static constexpr GroupElement from_id(int id) { return {uint8_t(id % 3), uint8_t(id / 3)}; }

    friend constexpr bool operator==(GroupElement, GroupElement) = default;
};

inline constexpr GroupElement compose(GroupElement f, GroupElement g) {
    return {uint8_t((f.rot + g.rot) % 3), uint8_t(f.mir ^ g.mir)};
}

inline constexpr GroupElement inverse(GroupElement g) {
    return {uint8_t((3 - g.rot) % 3), g.mir};
}

RankOneTensor act(GroupElement g, const RankOneTensor& t);

// The set {g.t : g in G}, deduplicated.  Its size divides |G|.
std::vector<RankOneTensor> orbit(const RankOneTensor& t, Group g);
int orbit_size(const RankOneTensor& t, Group g);
bool has_full_orbit(const RankOneTensor& t, Group g);

// The orbit element minimal under lexicographic order on the packed words
// of (A, B, C), together with an element mapping t onto it.
std::pair<RankOneTensor, GroupElement> canon(const RankOneTensor& t, Group g);

}  // namespace flipsym
