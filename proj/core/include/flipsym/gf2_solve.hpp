#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace flipsym {

// Dense bit matrix over F2, rows packed into 64-bit words.
class Gf2Matrix {
public:
    Gf2Matrix() = default;
    Gf2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), data_(rows * wpr_, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words_per_row() const { return wpr_; }

    uint64_t* row(std::size_t i) { return data_.data() + i * wpr_; }
    const uint64_t* row(std::size_t i) const { return data_.data() + i * wpr_; }

    bool get(std::size_t i, std::size_t j) const {
        return (row(i)[j >> 6] >> (j & 63)) & 1;
    }
    void toggle(std::size_t i, std::size_t j) { row(i)[j >> 6] ^= uint64_t(1) << (j & 63); }
    void set(std::size_t i, std::size_t j, bool v) {
        const uint64_t m = uint64_t(1) << (j & 63);
        if (v)
            row(i)[j >> 6] |= m;
        else
            row(i)[j >> 6] &= ~m;
    }

private:
    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<uint64_t> data_;
};

// Bit vector helpers used by the solver and the lifter.
struct BitVec {
    std::size_t size = 0;
    std::vector<uint64_t> words;

    explicit BitVec(std::size_t n = 0) : size(n), words((n + 63) / 64, 0) {}
    bool get(std::size_t i) const { return (words[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i, bool v) {
        const uint64_t m = uint64_t(1) << (i & 63);
        if (v)
            words[i >> 6] |= m;
        else
            words[i >> 6] &= ~m;
    }
    void toggle(std::size_t i) { words[i >> 6] ^= uint64_t(1) << (i & 63); }
    void operator^=(const BitVec& o) {
        for (std::size_t w = 0; w < words.size(); ++w)
            words[w] ^= o.words[w];
    }
    friend bool operator==(const BitVec&, const BitVec&) = default;
};

struct Gf2Solution {
    BitVec particular;               // one solution of A x = b
    std::vector<BitVec> nullspace;   // basis of A x = 0
};

// Gauss-Jordan elimination on a copy of (matrix | rhs).  Returns a
// particular solution plus a nullspace basis, or nullopt when the system
// is infeasible.
std::optional<Gf2Solution> gf2_solve(const Gf2Matrix& matrix, const BitVec& rhs);

// A * x over F2.
BitVec gf2_apply(const Gf2Matrix& matrix, const BitVec& x);

}  // namespace flipsym
