#pragma once

#include <cstddef>
#include <vector>

#include "flipsym/bitmatrix.hpp"

namespace flipsym {

// Dense order-3 tensor over F2 with n^6 entries, indexed by three matrix
// cells (a_idx, b_idx, c_idx), each in [0, n^2).  The c dimension is
// contiguous, so accumulating a rank-one tensor XORs one n^2-bit span per
// set (a, b) bit pair.  Materialized for verification and lifting only,
// never inside the walk loop.
class TensorF2 {
public:
    explicit TensorF2(int n);

    int dim() const { return n_; }

    // Entry at (i1,i2,j1,j2,k1,k2), all 0-based.
    bool get(int i1, int i2, int j1, int j2, int k1, int k2) const;
    void toggle(int i1, int i2, int j1, int j2, int k1, int k2);

    // XOR-accumulates A (x) B (x) C.
    void add(const RankOneTensor& t);

    std::size_t ones() const;
    bool is_zero() const;

    friend bool operator==(const TensorF2& lhs, const TensorF2& rhs) {
        return lhs.n_ == rhs.n_ && lhs.words_ == rhs.words_;
    }

private:
    std::size_t bit_index(int a_idx, int b_idx, int c_idx) const {
        return (std::size_t(a_idx) * nn_ + b_idx) * nn_ + c_idx;
    }

    int n_;
    int nn_;  // n^2
    std::vector<uint64_t> words_;
};

// The n x n matrix multiplication tensor: entry (i1,i2,j1,j2,k1,k2) is 1
// iff i2=j1, j2=k1, k2=i1; equivalently the sum over i,j,k of
// E_{i,j} (x) E_{j,k} (x) E_{k,i}.
TensorF2 mmt(int n);

}  // namespace flipsym
