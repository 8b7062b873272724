#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

#include "cpath/mix.hpp"

namespace cpath {

/// Zobrist-style simple tabulation hashing over a fixed number of input byte
/// positions. Every position holds 256 random 64-bit words drawn from a
/// splitmix64 stream seeded with `seed` (position-major order); the hash of an
/// input is the XOR of one word per byte. Simple tabulation is more than
/// 2-independent, and identical seeds reproduce identical tables.
template <size_t kBytes>
class Tabulation {
  public:
    explicit Tabulation(uint64_t seed) : seed_(seed) {
        SplitMix64 gen(seed);
        for (auto& table : tables_)
            for (auto& word : table) word = gen.next();
    }

    uint64_t seed() const { return seed_; }

    uint64_t hash_bytes(const uint8_t* bytes) const {
        uint64_t h = 0;
        for (size_t p = 0; p < kBytes; ++p) h ^= tables_[p][bytes[p]];
        return h;
    }

    const std::array<uint64_t, 256>& table(size_t position) const {
        return tables_[position];
    }

  private:
    std::array<std::array<uint64_t, 256>, kBytes> tables_;
    uint64_t seed_;
};

/// Hash over the 12-byte concatenation of a 64-bit path fingerprint
/// (little-endian, positions 0-7) and a 32-bit vertex index (little-endian,
/// positions 8-11). The two partial folds are exposed so evaluation loops can
/// reuse the fingerprint half across many vertices:
/// operator()(fp, v) == prefix(fp) ^ suffix(v), bit for bit.
class TabulationHash {
  public:
    explicit TabulationHash(uint64_t seed) : tab_(seed) {}

    uint64_t seed() const { return tab_.seed(); }

    uint64_t operator()(uint64_t fingerprint, uint32_t vertex) const {
        return prefix(fingerprint) ^ suffix(vertex);
    }

    uint64_t prefix(uint64_t fingerprint) const {
        uint64_t h = 0;
        for (size_t p = 0; p < 8; ++p)
            h ^= tab_.table(p)[(fingerprint >> (8 * p)) & 0xff];
        return h;
    }

    uint64_t suffix(uint32_t vertex) const {
        uint64_t h = 0;
        for (size_t p = 0; p < 4; ++p)
            h ^= tab_.table(8 + p)[(vertex >> (8 * p)) & 0xff];
        return h;
    }

  private:
    Tabulation<12> tab_;
};

inline TabulationHash new_tabulation(uint64_t seed) { return TabulationHash(seed); }

/// Hash over a 4-byte (little-endian) set element; used by the MinHash
/// baseline as its 2-independent permutation surrogate.
class ElementHash {
  public:
    explicit ElementHash(uint64_t seed) : tab_(seed) {}

    uint64_t seed() const { return tab_.seed(); }

    uint64_t operator()(uint32_t element) const {
        uint64_t h = 0;
        for (size_t p = 0; p < 4; ++p)
            h ^= tab_.table(p)[(element >> (8 * p)) & 0xff];
        return h;
    }

  private:
    Tabulation<4> tab_;
};

/// Compressed identity of a path in the branching process. The root path
/// starting at index s in [w] has value s at depth 0; extensions hash the
/// (value, vertex) pair, so two distinct paths collide with probability
/// about 2^-64.
struct PathFingerprint {
    uint64_t value = 0;
    uint32_t depth = 0;

    friend bool operator==(const PathFingerprint&, const PathFingerprint&) = default;
};

inline PathFingerprint root_fingerprint(uint32_t start_index) {
    return PathFingerprint{start_index, 0};
}

/// Interprets the top 53 bits of a hash as a binary fraction; exact as a
/// double and always in [0, 1).
inline double to_unit(uint64_t h) {
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

/// Uniform value in [0,1) used for the branching survival test.
inline double threshold_value(const TabulationHash& h, PathFingerprint fp,
                              uint32_t vertex) {
    return to_unit(h(fp.value, vertex));
}

inline PathFingerprint extend_fingerprint(const TabulationHash& h,
                                          PathFingerprint fp, uint32_t vertex) {
    return PathFingerprint{h(fp.value, vertex), fp.depth + 1};
}

/// Tabulation over a variable-length byte string with lazily evaluated table
/// entries: the word for (position p, byte b) is exactly what a materialized
/// Tabulation table would hold, mix64(seed + (p*256 + b + 1) * gamma).
/// The empty string hashes to 0 (XOR of zero words).
inline uint64_t tabulation_fold(uint64_t seed, const uint8_t* bytes, size_t len) {
    uint64_t h = 0;
    for (size_t p = 0; p < len; ++p) {
        const uint64_t index = p * 256 + bytes[p] + 1;
        h ^= mix64(seed + index * kSplitMixGamma);
    }
    return h;
}

}  // namespace cpath
