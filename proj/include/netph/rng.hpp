#pragma once

#include <cstdint>

namespace netph {

// SplitMix64 (Steele, Lea, Flood 2014; the engine behind Java's
// SplittableRandom). 64-bit state, one multiply-xorshift round per output,
// identical sequences on every platform. All randomized code in this library
// draws from it so that a (seed, stream) pair pins the output bit-for-bit.
//
// Stream splitting: independent sample streams are derived as
// for_stream(seed, k), which finalizes seed and k through the same mixer
// before combining them. Samples k = 0, 1, 2, ... of an experiment each get
// their own stream; the master seed never feeds two streams directly.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    static SplitMix64 for_stream(std::uint64_t seed, std::uint64_t stream) {
        return SplitMix64(mix(seed) ^ mix(stream * 0x9E3779B97F4A7C15ULL + 0x243F6A8885A308D3ULL));
    }

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix(state_);
    }

    // Uniform double in [0, 1), 53 random bits.
    double next_double() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    // Uniform integer in [0, bound), unbiased via rejection. bound > 0.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t threshold = -bound % bound; // 2^64 mod bound
        for (;;) {
            std::uint64_t x = next();
            if (x >= threshold) return x % bound;
        }
    }

  private:
    // Finalizer from the reference implementation.
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

} // namespace netph
