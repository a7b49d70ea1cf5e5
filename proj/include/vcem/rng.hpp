#pragma once

#include <cmath>
#include <cstdint>

namespace vcem {

// Deterministic PRNG used everywhere a seed appears. The exact algorithms are
// part of the output contract (identical seeds must give identical bytes on
// every platform), so nothing from <random> is used. The variant is:
//
//   state    xoshiro256** (Blackman & Vigna), state seeded by four successive
//            outputs of splitmix64(seed)
//   u64      next(): xoshiro256** scrambler
//   f64      next_double():       (next() >> 11) * 2^-53            in [0, 1)
//            next_double_open0(): ((next() >> 11) + 1) * 2^-53      in (0, 1]
//   normal   Box-Muller, cosine branch only: each call consumes exactly two
//            uniforms u1 = next_double_open0(), u2 = next_double() and returns
//            sqrt(-2 ln u1) * cos(2 pi u2). No caching of the sine value.
//   bounded  bounded(n): multiply-shift (128-bit product >> 64), no rejection.
//
// sub_seed(seed, index) derives an order-independent per-item stream:
//   splitmix64_mix(seed ^ splitmix64_mix(index + 0x9E3779B97F4A7C15)).

inline std::uint64_t splitmix64_mix(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64_mix(seed ^ splitmix64_mix(index + 0x9E3779B97F4A7C15ULL));
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t z = seed;
        for (auto& word : state_) {
            z += 0x9E3779B97F4A7C15ULL;
            std::uint64_t t = z;
            t = (t ^ (t >> 30)) * 0xBF58476D1CE4E5B9ULL;
            t = (t ^ (t >> 27)) * 0x94D049BB133111EBULL;
            word = t ^ (t >> 31);
        }
    }

    std::uint64_t next() {
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

    // [0, 1)
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // (0, 1] -- safe as a log() argument
    double next_double_open0() {
        return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    double normal() {
        const double u1 = next_double_open0();
        const double u2 = next_double();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    // uniform in [0, n), n >= 1
    std::uint64_t bounded(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * n) >> 64);
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t state_[4];
};

}  // namespace vcem
