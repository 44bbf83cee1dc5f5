#include "flipsym/tensor_f2.hpp"

#include <bit>
#include <stdexcept>

namespace flipsym {

TensorF2::TensorF2(int n) : n_(n), nn_(n * n) {
    if (n < 1 || n > kMaxDim)
        throw std::invalid_argument("tensor dimension must be between 1 and 8");
    std::size_t bits = std::size_t(nn_) * nn_ * nn_;
    words_.assign((bits + 63) / 64, 0);
}

bool TensorF2::get(int i1, int i2, int j1, int j2, int k1, int k2) const {
    std::size_t p = bit_index(i1 * n_ + i2, j1 * n_ + j2, k1 * n_ + k2);
    return (words_[p >> 6] >> (p & 63)) & 1;
}

void TensorF2::toggle(int i1, int i2, int j1, int j2, int k1, int k2) {
    std::size_t p = bit_index(i1 * n_ + i2, j1 * n_ + j2, k1 * n_ + k2);
    words_[p >> 6] ^= uint64_t(1) << (p & 63);
}

void TensorF2::add(const RankOneTensor& t) {
    assert(t.dim() == n_);
    uint64_t a = t.a.bits;
    const uint64_t c = t.c.bits;
    while (a) {
        const int p = std::countr_zero(a);
        a &= a - 1;
        uint64_t b = t.b.bits;
        while (b) {
            const int q = std::countr_zero(b);
            b &= b - 1;
            const std::size_t base = bit_index(p, q, 0);
            const std::size_t w = base >> 6;
            const int sh = int(base & 63);
            words_[w] ^= c << sh;
            if (sh != 0 && sh + nn_ > 64)
                words_[w + 1] ^= c >> (64 - sh);
        }
    }
}

std::size_t TensorF2::ones() const {
    std::size_t total = 0;
    for (uint64_t w : words_)
        total += std::popcount(w);
    return total;
}

bool TensorF2::is_zero() const {
    for (uint64_t w : words_)
        if (w)
            return false;
    return true;
}

TensorF2 mmt(int n) {
    TensorF2 t(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                t.toggle(i, j, j, k, k, i);
    return t;
}

}  // namespace flipsym
