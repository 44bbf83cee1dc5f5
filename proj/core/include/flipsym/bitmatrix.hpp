#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <string>

namespace flipsym {

inline constexpr int kMaxDim = 8;

// Reverses all 64 bits of a word.
inline constexpr uint64_t bit_reverse64(uint64_t x) {
    x = ((x & 0x00000000ffffffffull) << 32) | ((x & 0xffffffff00000000ull) >> 32);
    x = ((x & 0x0000ffff0000ffffull) << 16) | ((x & 0xffff0000ffff0000ull) >> 16);
    x = ((x & 0x00ff00ff00ff00ffull) << 8) | ((x & 0xff00ff00ff00ff00ull) >> 8);
    x = ((x & 0x0f0f0f0f0f0f0f0full) << 4) | ((x & 0xf0f0f0f0f0f0f0f0ull) >> 4);
    x = ((x & 0x3333333333333333ull) << 2) | ((x & 0xccccccccccccccccull) >> 2);
    x = ((x & 0x5555555555555555ull) << 1) | ((x & 0xaaaaaaaaaaaaaaaaull) >> 1);
    return x;
}

inline constexpr uint64_t word_mask(int n) {
    return (n * n == 64) ? ~uint64_t(0) : ((uint64_t(1) << (n * n)) - 1);
}

// An n x n matrix over F2 (n <= 8) packed row-major into one 64-bit word.
// Bit i*n+j (least significant first) holds entry (i, j), 0-based.
// Addition is XOR; bits above the low n^2 positions stay zero.
struct BitMatrix {
    uint8_t n = 0;
    uint64_t bits = 0;

    constexpr BitMatrix() = default;
    constexpr BitMatrix(int dim, uint64_t word) : n(uint8_t(dim)), bits(word) {
        assert(dim >= 1 && dim <= kMaxDim);
        assert((word & ~word_mask(dim)) == 0);
    }

    static constexpr BitMatrix zero(int dim) { return BitMatrix(dim, 0); }

    // E_{i,j} with 0-based indices.
    static constexpr BitMatrix basis(int dim, int i, int j) {
        assert(i >= 0 && i < dim && j >= 0 && j < dim);
        return BitMatrix(dim, uint64_t(1) << (i * dim + j));
    }

    static constexpr BitMatrix identity(int dim) {
        uint64_t w = 0;
        for (int i = 0; i < dim; ++i)
            w |= uint64_t(1) << (i * dim + i);
        return BitMatrix(dim, w);
    }

    // Sum of E_{i,i} over the set bits of index_mask (bit i <-> row i).
    static constexpr BitMatrix diagonal(int dim, uint8_t index_mask) {
        uint64_t w = 0;
        for (int i = 0; i < dim; ++i)
            if (index_mask & (1u << i))
                w |= uint64_t(1) << (i * dim + i);
        return BitMatrix(dim, w);
    }

    constexpr bool get(int i, int j) const {
        assert(i >= 0 && i < n && j >= 0 && j < n);
        return (bits >> (i * n + j)) & 1;
    }

    constexpr void set(int i, int j, bool v) {
        assert(i >= 0 && i < n && j >= 0 && j < n);
        const uint64_t m = uint64_t(1) << (i * n + j);
        bits = v ? (bits | m) : (bits & ~m);
    }

    constexpr bool is_zero() const { return bits == 0; }
    constexpr int ones() const { return std::popcount(bits); }

    friend constexpr bool operator==(BitMatrix lhs, BitMatrix rhs) {
        return lhs.n == rhs.n && lhs.bits == rhs.bits;
    }

    friend constexpr BitMatrix operator^(BitMatrix lhs, BitMatrix rhs) {
        assert(lhs.n == rhs.n);
        return BitMatrix(lhs.n, lhs.bits ^ rhs.bits);
    }

    BitMatrix& operator^=(BitMatrix rhs) {
        assert(n == rhs.n);
        bits ^= rhs.bits;
        return *this;
    }
};

// J*m*J with J the backwards identity: entry (i,j) moves to (n-1-i, n-1-j).
// In the packed layout this is exactly a reversal of the low n^2 bits.
inline constexpr BitMatrix reverse(BitMatrix m) {
    return BitMatrix(m.n, bit_reverse64(m.bits) >> (64 - m.n * m.n));
}

inline constexpr BitMatrix transpose(BitMatrix m) {
    uint64_t w = 0;
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j)
            if (m.get(i, j))
                w |= uint64_t(1) << (j * m.n + i);
    return BitMatrix(m.n, w);
}

std::string to_string(BitMatrix m);

// Ordered triple A (x) B (x) C of equal-dimension factors.
struct RankOneTensor {
    BitMatrix a, b, c;

    RankOneTensor() = default;
    RankOneTensor(BitMatrix a_, BitMatrix b_, BitMatrix c_) : a(a_), b(b_), c(c_) {
        assert(a.n == b.n && b.n == c.n);
    }

    int dim() const { return a.n; }
    bool is_zero() const { return a.is_zero() || b.is_zero() || c.is_zero(); }

    friend bool operator==(const RankOneTensor& lhs, const RankOneTensor& rhs) {
        return lhs.a == rhs.a && lhs.b == rhs.b && lhs.c == rhs.c;
    }
    friend bool operator<(const RankOneTensor& lhs, const RankOneTensor& rhs) {
        if (lhs.a.bits != rhs.a.bits) return lhs.a.bits < rhs.a.bits;
        if (lhs.b.bits != rhs.b.bits) return lhs.b.bits < rhs.b.bits;
        return lhs.c.bits < rhs.c.bits;
    }
};

std::string to_string(const RankOneTensor& t);

}  // namespace flipsym
