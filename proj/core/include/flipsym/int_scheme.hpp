#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "flipsym/scheme.hpp"

namespace flipsym {

// n x n matrix with signed integer entries, row-major.
struct IntMatrix {
    int n = 0;
    std::vector<int64_t> v;

    IntMatrix() = default;
    explicit IntMatrix(int dim) : n(dim), v(std::size_t(dim) * dim, 0) {}

    int64_t& at(int i, int j) { return v[std::size_t(i) * n + j]; }
    int64_t at(int i, int j) const { return v[std::size_t(i) * n + j]; }

    bool is_zero() const {
        for (int64_t x : v)
            if (x)
                return false;
        return true;
    }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

IntMatrix reverse(const IntMatrix& m);    // J*m*J
IntMatrix transpose(const IntMatrix& m);
IntMatrix to_int(BitMatrix m);            // 0/1 entries
BitMatrix mod2(const IntMatrix& m);

struct IntRankOneTensor {
    IntMatrix a, b, c;

    int dim() const { return a.n; }
    friend bool operator==(const IntRankOneTensor&, const IntRankOneTensor&) = default;
};

IntRankOneTensor act(GroupElement g, const IntRankOneTensor& t);
IntRankOneTensor to_int(const RankOneTensor& t);
RankOneTensor mod2(const IntRankOneTensor& t);

// Integer-coefficient scheme with the same fixed + orbit-representative
// structure as Scheme.  Over Z the rotation permutes factors and the
// mirror conjugates by the backwards identity, both exactly.
struct IntScheme {
    int n = 0;
    Group group = Group::None;
    std::optional<DiagonalPartition> partition;
    std::vector<IntRankOneTensor> fixed;
    std::vector<IntRankOneTensor> orbits;

    int rank() const { return int(fixed.size()) + group_order(group) * int(orbits.size()); }

    friend bool operator==(const IntScheme&, const IntScheme&) = default;
};

IntScheme to_int(const Scheme& s);
Scheme mod2(const IntScheme& s);

std::vector<IntRankOneTensor> expand(const IntScheme& s);

// True iff the integer sum of all expanded tensors equals the integer
// matrix multiplication tensor.  Exact arithmetic, no tolerance.
bool verify_int(const IntScheme& s);

}  // namespace flipsym
