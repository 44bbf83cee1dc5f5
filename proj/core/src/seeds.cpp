#include "flipsym/seeds.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace flipsym {

Scheme make_start(int n, Group g, const DiagonalPartition& p) {
    std::string reason;
    if (!validate_partition(p, n, g, &reason))
        throw std::invalid_argument("invalid partition: " + reason);

    Scheme s;
    s.n = n;
    s.group = g;
    s.partition = p;

    for (const auto& part : p.parts) {
        uint8_t mask = 0;
        for (int i : part)
            mask |= uint8_t(1u << (i - 1));
        BitMatrix d = BitMatrix::diagonal(n, mask);
        s.fixed.emplace_back(d, d, d);
    }

    // Standard-basis remainder: the off-"all-equal" terms of the
    // multiplication tensor plus the correction terms of each part.
    std::vector<RankOneTensor> elements;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                if (i == j && j == k)
                    continue;
                elements.emplace_back(BitMatrix::basis(n, i, j), BitMatrix::basis(n, j, k),
                                      BitMatrix::basis(n, k, i));
            }
    for (const auto& part : p.parts)
        for (int i : part)
            for (int j : part)
                for (int k : part) {
                    if (i == j && j == k)
                        continue;
                    elements.emplace_back(BitMatrix::basis(n, i - 1, i - 1),
                                          BitMatrix::basis(n, j - 1, j - 1),
                                          BitMatrix::basis(n, k - 1, k - 1));
                }

    std::map<std::tuple<uint64_t, uint64_t, uint64_t>, std::pair<RankOneTensor, int>> groups;
    for (const auto& t : elements) {
        RankOneTensor rep = canon(t, g).first;
        auto key = std::make_tuple(rep.a.bits, rep.b.bits, rep.c.bits);
        auto [it, inserted] = groups.try_emplace(key, rep, 0);
        it->second.second += 1;
    }
    const int order = group_order(g);
    for (const auto& [key, group_entry] : groups) {
        if (group_entry.second != order)
            throw std::logic_error("starting point produced a non-full orbit");
        s.orbits.push_back(group_entry.first);
    }
    // std::map ordering already yields deterministic, lexicographically
    // sorted representatives.
    return s;
}

}  // namespace flipsym
