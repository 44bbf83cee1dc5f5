#include "flipsym/symmetry.hpp"

#include <algorithm>

namespace flipsym {

const char* group_name(Group g) {
    switch (g) {
        case Group::None: return "none";
        case Group::C3: return "C3";
        case Group::C3xZ2: return "C3xZ2";
    }
    return "?";
}

std::optional<Group> parse_group(std::string_view name) {
    if (name == "none") return Group::None;
    if (name == "C3") return Group::C3;
    if (name == "C3xZ2") return Group::C3xZ2;
    return std::nullopt;
}

RankOneTensor act(GroupElement g, const RankOneTensor& t) {
    BitMatrix f[3] = {t.a, t.b, t.c};
    if (g.mir)
        for (auto& m : f)
            m = reverse(m);
    // Slot i of the image holds factor (i - rot) mod 3 of the input.
    return RankOneTensor(f[(3 - g.rot) % 3], f[(4 - g.rot) % 3], f[(5 - g.rot) % 3]);
}

std::vector<RankOneTensor> orbit(const RankOneTensor& t, Group g) {
    std::vector<RankOneTensor> out;
    const int order = group_order(g);
    out.reserve(order);
    for (int id = 0; id < order; ++id) {
        RankOneTensor image = act(GroupElement::from_id(id), t);
        if (std::find(out.begin(), out.end(), image) == out.end())
            out.push_back(image);
    }
    return out;
}

int orbit_size(const RankOneTensor& t, Group g) {
    return int(orbit(t, g).size());
}

bool has_full_orbit(const RankOneTensor& t, Group g) {
    const int order = group_order(g);
    for (int id = 1; id < order; ++id)
        if (act(GroupElement::from_id(id), t) == t)
            return false;
    return true;
}

std::pair<RankOneTensor, GroupElement> canon(const RankOneTensor& t, Group g) {
    RankOneTensor best = t;
    GroupElement arg{};
    const int order = group_order(g);
    for (int id = 1; id < order; ++id) {
        GroupElement e = GroupElement::from_id(id);
        RankOneTensor image = act(e, t);
        if (image < best) {
            best = image;
            arg = e;
        }
    }
    return {best, arg};
}

}  // namespace flipsym
