#pragma once

#include <cstdint>

namespace flipsym {

// splitmix64 step; used for seeding and as a general 64-bit mixer.
inline constexpr uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

inline constexpr uint64_t mix64(uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// xoshiro256** (Blackman/Vigna). Seeded through splitmix64, with long_jump()
// providing 2^192-spaced streams for independent workers.
class Xoshiro256 {
public:
    using result_type = uint64_t;

    explicit Xoshiro256(uint64_t seed = 1) {
        uint64_t sm = seed;
        for (auto& w : s_)
            w = splitmix64(sm);
    }

    uint64_t operator()() {
        const uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform draw from [0, n); multiply-shift, bias below n/2^64.
    uint64_t below(uint64_t n) {
        return uint64_t((static_cast<unsigned __int128>(operator()()) * n) >> 64);
    }

    void long_jump() {
        static constexpr uint64_t kLongJump[4] = {0x76e15d3efefdcbbfull, 0xc5004e441c522fb3ull,
                                                  0x77710069854ee241ull, 0x39109bb02acbe635ull};
        uint64_t s0 = 0, s1 = 0, s2 = 0, s3 = 0;
        for (uint64_t jump : kLongJump) {
            for (int b = 0; b < 64; b++) {
                if (jump & (uint64_t(1) << b)) {
                    s0 ^= s_[0];
                    s1 ^= s_[1];
                    s2 ^= s_[2];
                    s3 ^= s_[3];
                }
                operator()();
            }
        }
        s_[0] = s0;
        s_[1] = s1;
        s_[2] = s2;
        s_[3] = s3;
    }

    static constexpr uint64_t min() { return 0; }
    static constexpr uint64_t max() { return ~uint64_t(0); }

private:
    static constexpr uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    uint64_t s_[4];
};

}  // namespace flipsym
