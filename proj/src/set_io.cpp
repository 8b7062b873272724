#include "cpath/set_io.hpp"

#include <fstream>
#include <istream>
#include <limits>
#include <ostream>

namespace cpath {

namespace {

[[noreturn]] void fail(size_t line_no, const std::string& what) {
    throw DataError("line " + std::to_string(line_no) + ": " + what);
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open " + path);
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot open " + path + " for writing");
    return out;
}

}  // namespace

std::vector<SparseSet> read_set_file(std::istream& in) {
    std::vector<SparseSet> sets;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        std::vector<uint32_t> dims;
        size_t pos = 0;
        while (pos < line.size()) {
            if (line[pos] == ' ') fail(line_no, "unexpected space");
            uint64_t value = 0;
            size_t start = pos;
            while (pos < line.size() && line[pos] >= '0' && line[pos] <= '9') {
                value = value * 10 + static_cast<uint64_t>(line[pos] - '0');
                if (value > std::numeric_limits<uint32_t>::max())
                    fail(line_no, "element exceeds 32-bit range");
                ++pos;
            }
            if (pos == start) fail(line_no, "expected an integer");
            if (!dims.empty() && value <= dims.back())
                fail(line_no, "elements must be strictly increasing");
            dims.push_back(static_cast<uint32_t>(value));
            if (pos < line.size()) {
                if (line[pos] != ' ') fail(line_no, "expected a single space separator");
                ++pos;
                if (pos == line.size()) fail(line_no, "trailing space");
            }
        }
        sets.push_back(SparseSet::from_sorted(std::move(dims)));
    }
    return sets;
}

std::vector<SparseSet> read_set_file(const std::string& path) {
    auto in = open_input(path);
    return read_set_file(in);
}

void write_set_file(std::ostream& out, std::span<const SparseSet> sets) {
    for (const auto& set : sets) {
        bool first = true;
        for (uint32_t dim : set.dims()) {
            if (!first) out << ' ';
            out << dim;
            first = false;
        }
        out << '\n';
    }
}

void write_set_file(const std::string& path, std::span<const SparseSet> sets) {
    auto out = open_output(path);
    write_set_file(out, sets);
}

namespace {

int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

}  // namespace

std::vector<DenseBits> read_hex_rows(std::istream& in) {
    std::vector<DenseBits> rows;
    std::string line;
    size_t line_no = 0;
    size_t expected_digits = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (expected_digits == 0)
            expected_digits = line.size();
        else if (line.size() != expected_digits)
            fail(line_no, "rows must all have the same length");

        std::vector<uint8_t> bytes((line.size() + 1) / 2, 0);
        for (size_t i = 0; i < line.size(); ++i) {
            const int nibble = hex_digit(line[i]);
            if (nibble < 0) fail(line_no, "invalid hex digit");
            if (i % 2 == 0)
                bytes[i / 2] = static_cast<uint8_t>(nibble << 4);
            else
                bytes[i / 2] = static_cast<uint8_t>(bytes[i / 2] | nibble);
        }
        rows.push_back(DenseBits::from_bytes(std::move(bytes), line.size() * 4));
    }
    return rows;
}

std::vector<DenseBits> read_hex_rows(const std::string& path) {
    auto in = open_input(path);
    return read_hex_rows(in);
}

void write_hex_rows(std::ostream& out, std::span<const DenseBits> rows) {
    static const char* digits = "0123456789abcdef";
    for (const auto& row : rows) {
        for (uint8_t byte : row.bytes()) {
            out << digits[byte >> 4] << digits[byte & 0xf];
        }
        out << '\n';
    }
}

}  // namespace cpath
