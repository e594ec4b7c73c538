#pragma once

#include <cstdint>

namespace autgrp {

// Counter-based splittable generator (splitmix64). Streams derived from the
// same seed with different stream ids are independent; a fixed (seed, stream)
// pair reproduces the same sequence.
class Rng {
public:
    explicit Rng(uint64_t seed, uint64_t stream = 0)
        : state_(mix(seed ^ mix(stream + 0x7b1faad1u))) {}

    uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix(state_);
    }

    // Uniform in [0, bound); bound > 0.
    uint64_t below(uint64_t bound) {
        // Lemire's multiply-shift with rejection
        uint64_t x = next();
        __uint128_t m = static_cast<__uint128_t>(x) * bound;
        uint64_t l = static_cast<uint64_t>(m);
        if (l < bound) {
            uint64_t t = -bound % bound;
            while (l < t) {
                x = next();
                m = static_cast<__uint128_t>(x) * bound;
                l = static_cast<uint64_t>(m);
            }
        }
        return static_cast<uint64_t>(m >> 64);
    }

    double uniform01() { return (next() >> 11) * 0x1.0p-53; }

private:
    static uint64_t mix(uint64_t z) {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ULL;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebULL;
        z ^= z >> 31;
        return z;
    }
    uint64_t state_;
};

} // namespace autgrp
