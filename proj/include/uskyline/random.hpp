#pragma once

#include <cstdint>
#include <cstddef>

namespace uskyline {

// Seed for every randomized operation. Identical seed + identical inputs
// gives bit-identical results, independent of platform and standard library:
// all distributions below are hand-rolled on top of the raw generator stream.
struct RandomSeed {
    std::uint64_t value = 0;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Deterministically derives an independent stream from a base seed.
// Used to give shards, repeats and pipeline stages uncorrelated seeds.
inline RandomSeed derive_seed(RandomSeed base, std::uint64_t stream) {
    return RandomSeed{splitmix64(base.value ^ splitmix64(stream))};
}

// Small counter-free PRNG (xoshiro256**), seeded via splitmix64.
class Rng {
public:
    explicit Rng(RandomSeed seed) {
        std::uint64_t x = seed.value;
        for (auto& word : state_) {
            x = splitmix64(x);
            word = x;
        }
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform double in [0, 1), 53-bit resolution.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform double in [lo, hi).
    double uniform_real(double lo, double hi) { return lo + next_unit() * (hi - lo); }

    // Uniform double in (lo, hi]; mirrors next_unit so hi is attainable and lo is not.
    double uniform_real_open_low(double lo, double hi) { return hi - next_unit() * (hi - lo); }

    // Uniform integer in [0, n); n must be positive. Unbiased via rejection.
    std::size_t uniform_index(std::size_t n) {
        const std::uint64_t bound = static_cast<std::uint64_t>(n);
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return static_cast<std::size_t>(x % bound);
    }

    bool bernoulli(double p) { return next_unit() < p; }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t state_[4];
};

}  // namespace uskyline
