#pragma once

#include <cstdint>

namespace detkit {

// Deterministic 64-bit generator (splitmix64). The exact state update and the
// modulo reduction below are part of the artifact contract: a witness found
// under a given seed must reproduce bit-for-bit in any implementation.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound) by plain modulo reduction; bound > 0.
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

    // Uniform integer in [lo, hi].
    std::int64_t next_in(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

  private:
    std::uint64_t state_;
};

} // namespace detkit
