#pragma once

#include <bit>
#include <cstdint>

#include "minregret/errors.hpp"

// Deterministic random number generation, pinned to published algorithms so
// that independent implementations reproduce every sampled value bit for bit:
//
//   * seeding: splitmix64 initialized with the user seed; its first four
//     outputs become the xoshiro256** state,
//   * stream:  xoshiro256** 1.0,
//   * bounded draws: mask-and-reject (see uniform_int below).
//
// Reference outputs are frozen in the test suite and listed in
// docs/determinism.md.

namespace minregret {

class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

    constexpr std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

class Xoshiro256StarStar {
public:
    explicit constexpr Xoshiro256StarStar(std::uint64_t seed) {
        SplitMix64 mix(seed);
        for (auto& word : state_) word = mix.next();
    }

    constexpr std::uint64_t next() {
        const std::uint64_t result = std::rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = std::rotl(state_[3], 45);
        return result;
    }

private:
    std::uint64_t state_[4] = {};
};

/// Uniform integer in [lo, hi], both inclusive. Draw rule (fixed for
/// reproducibility): let span = hi - lo + 1; mask = bit_ceil(span) - 1;
/// repeatedly take r = next() & mask until r < span; return lo + r.
inline std::int64_t uniform_int(Xoshiro256StarStar& rng, std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw PreconditionError("uniform_int: empty range");
    const std::uint64_t span =
        static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    if (span == 1) return lo;
    const std::uint64_t mask = std::bit_ceil(span) - 1;
    for (;;) {
        const std::uint64_t r = rng.next() & mask;
        if (r < span) return lo + static_cast<std::int64_t>(r);
    }
}

}  // namespace minregret
