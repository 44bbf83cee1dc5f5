#pragma once

#include <optional>
#include <vector>

#include "flipsym/partition.hpp"
#include "flipsym/symmetry.hpp"
#include "flipsym/tensor_f2.hpp"

namespace flipsym {

// A G-invariant matrix multiplication scheme over F2, stored as the fixed
// (G-invariant) tensors plus one representative per full orbit.  Its rank
// is |fixed| + |G| * #orbits.
struct Scheme {
    int n = 0;
    Group group = Group::None;
    std::optional<DiagonalPartition> partition;
    std::vector<RankOneTensor> fixed;
    std::vector<RankOneTensor> orbits;

    int rank() const { return int(fixed.size()) + group_order(group) * int(orbits.size()); }

    friend bool operator==(const Scheme&, const Scheme&) = default;
};

// Fixed tensors once each, then g.rep for every orbit and every g in G;
// the multiset has exactly rank() elements.
std::vector<RankOneTensor> expand(const Scheme& s);

// XOR of the TensorF2 of every expanded tensor.
TensorF2 expanded_sum(const Scheme& s);

// True iff the expanded sum equals the matrix multiplication tensor.
bool verify_f2(const Scheme& s);

}  // namespace flipsym
