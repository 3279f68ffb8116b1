#pragma once

// Deterministic, platform-independent random streams.
//
// Generator: xoshiro256** seeded through SplitMix64. The full recurrence is
// documented here so runs are reproducible from (seed, stream) alone:
//
//   mix(z):  z = (z ^ (z >> 30)) * 0xBF58476D1E4B7B29
//            z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//            return z ^ (z >> 31)
//   splitmix_next(s): s += 0x9E3779B97F4A7C15; return mix(s)
//
//   state init: s = seed XOR mix(stream + 0x9E3779B97F4A7C15)
//               state[0..3] = four successive splitmix_next(s) outputs
//               (all-zero state falls back to state[0] = 1)
//
//   next():  r = rotl(state[1] * 5, 7) * 9
//            t = state[1] << 17
//            state[2] ^= state[0]; state[3] ^= state[1]
//            state[1] ^= state[2]; state[0] ^= state[3]
//            state[2] ^= t; state[3] = rotl(state[3], 45); return r
//
// Bounded digits use the multiply-high reduction (rejection-free):
// digit = floor(next() * b / 2^64). Doubles take the top 53 bits.

#include <cstdint>

#include "lacunary/digit_stream.hpp"

namespace lacunary {

struct RngSpec {
    uint64_t seed = 1;
    uint64_t stream = 0;
};

class Xoshiro256ss {
public:
    explicit Xoshiro256ss(RngSpec spec) : Xoshiro256ss(spec.seed, spec.stream) {}

    Xoshiro256ss(uint64_t seed, uint64_t stream) {
        uint64_t s = seed ^ mix(stream + 0x9E3779B97F4A7C15ull);
        for (auto& w : state_) {
            s += 0x9E3779B97F4A7C15ull;
            w = mix(s);
        }
        if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
    }

    uint64_t next_u64() {
        const uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // uniform in [0, bound) via multiply-high
    uint64_t next_below(uint64_t bound) {
        return static_cast<uint64_t>((static_cast<__uint128_t>(next_u64()) * bound) >> 64);
    }

    // uniform double in [0, 1), 53 random bits
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    static uint64_t mix(uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1E4B7B29ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    uint64_t state_[4];
};

// i.i.d. uniform digits, reproducible per (seed, stream)
inline DigitStream uniform_digits(RngSpec spec, uint32_t b, uint32_t m) {
    Xoshiro256ss g(spec);
    std::vector<uint8_t> d(m);
    for (auto& x : d) x = static_cast<uint8_t>(g.next_below(b));
    return DigitStream(b, std::move(d));
}

inline DigitStream uniform_digits(Xoshiro256ss& g, uint32_t b, uint32_t m) {
    std::vector<uint8_t> d(m);
    for (auto& x : d) x = static_cast<uint8_t>(g.next_below(b));
    return DigitStream(b, std::move(d));
}

}  // namespace lacunary
