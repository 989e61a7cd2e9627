#pragma once

#include <cstdint>

namespace seidelskew::detail {

/// SplitMix64 (Steele, Lea, Flood; public-domain reference constants).
/// Counter-based: the state advances by a fixed odd gamma, so the k-th output
/// is a pure function of (seed, k). Used wherever reproducible randomness is
/// promised across runs and languages.
class SplitMix64 {
   public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Fair coin: the top bit of the next output.
    bool next_bit() { return (next() >> 63) != 0; }

   private:
    std::uint64_t state_;
};

}  // namespace seidelskew::detail
