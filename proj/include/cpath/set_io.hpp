#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "cpath/sparse_set.hpp"

namespace cpath {

/// Set-file format: UTF-8 text, one set per line, elements as base-10
/// integers separated by single spaces, strictly increasing. Blank lines are
/// ignored; the line number among non-blank lines (0-based) is the point id.
/// Errors name the physical (1-based) line.
std::vector<SparseSet> read_set_file(std::istream& in);
std::vector<SparseSet> read_set_file(const std::string& path);

void write_set_file(std::ostream& out, std::span<const SparseSet> sets);
void write_set_file(const std::string& path, std::span<const SparseSet> sets);

/// A dense bit vector; coordinate 0 is the most significant bit of the first
/// byte, matching the hex row encoding.
class DenseBits {
  public:
    DenseBits() = default;
    explicit DenseBits(size_t dimension)
        : bytes_((dimension + 7) / 8, 0), dimension_(dimension) {}

    size_t dimension() const { return dimension_; }

    bool get(size_t coordinate) const {
        return (bytes_[coordinate / 8] >> (7 - coordinate % 8)) & 1;
    }

    void set(size_t coordinate, bool value) {
        const uint8_t mask = static_cast<uint8_t>(1u << (7 - coordinate % 8));
        if (value)
            bytes_[coordinate / 8] |= mask;
        else
            bytes_[coordinate / 8] &= static_cast<uint8_t>(~mask);
    }

    const std::vector<uint8_t>& bytes() const { return bytes_; }

    static DenseBits from_bytes(std::vector<uint8_t> bytes, size_t dimension) {
        DenseBits b;
        b.bytes_ = std::move(bytes);
        b.dimension_ = dimension;
        return b;
    }

  private:
    std::vector<uint8_t> bytes_;
    size_t dimension_ = 0;
};

/// Hex rows: one vector per line, two hex digits per byte, most significant
/// bit first. All rows must have the same length; the dimension is 4 times
/// the number of hex digits.
std::vector<DenseBits> read_hex_rows(std::istream& in);
std::vector<DenseBits> read_hex_rows(const std::string& path);
void write_hex_rows(std::ostream& out, std::span<const DenseBits> rows);

}  // namespace cpath
