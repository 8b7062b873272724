#pragma once

#include <cstdint>

namespace cpath {

// All randomness in this project derives from splitmix64 so that every run is
// reproducible from a single 64-bit seed. Constants are the standard ones:
// increment 0x9E3779B97F4A7C15, multipliers 0xBF58476D1CE4E5B9 and
// 0x94D049BB133111EB (Steele, Lea & Flood).
constexpr uint64_t kSplitMixGamma = 0x9E3779B97F4A7C15ull;

constexpr uint64_t mix64(uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

class SplitMix64 {
  public:
    explicit constexpr SplitMix64(uint64_t seed) : state_(seed) {}

    constexpr uint64_t next() {
        state_ += kSplitMixGamma;
        return mix64(state_);
    }

  private:
    uint64_t state_;
};

/// Deterministic RNG for instance generators and Monte Carlo drivers.
class Rng {
  public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    uint64_t next_u64() { return gen_.next(); }

    /// Uniform in [0, n) via the multiply-shift reduction.
    uint64_t below(uint64_t n) {
        return static_cast<uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    /// Uniform in [0, 1), 53 bits of precision.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  private:
    SplitMix64 gen_;
};

}  // namespace cpath
