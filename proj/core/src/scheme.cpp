#include "flipsym/scheme.hpp"

namespace flipsym {

std::vector<RankOneTensor> expand(const Scheme& s) {
    std::vector<RankOneTensor> out;
    out.reserve(s.rank());
    for (const auto& t : s.fixed)
        out.push_back(t);
    const int order = group_order(s.group);
    for (const auto& rep : s.orbits)
        for (int id = 0; id < order; ++id)
            out.push_back(act(GroupElement::from_id(id), rep));
    return out;
}

TensorF2 expanded_sum(const Scheme& s) {
    TensorF2 sum(s.n);
    for (const auto& t : s.fixed)
        sum.add(t);
    const int order = group_order(s.group);
    for (const auto& rep : s.orbits)
        for (int id = 0; id < order; ++id)
            sum.add(act(GroupElement::from_id(id), rep));
    return sum;
}

bool verify_f2(const Scheme& s) {
    return expanded_sum(s) == mmt(s.n);
}

}  // namespace flipsym
