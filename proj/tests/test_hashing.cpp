#include "doctest.h"

#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

#include "cpath/hashing.hpp"
#include "cpath/mix.hpp"

using namespace cpath;

TEST_CASE("tabulation determinism and seed sensitivity") {
    const Tabulation<12> a(0);
    const Tabulation<12> b(0);
    const Tabulation<12> c(1);
    bool identical = true, differs = false;
    for (size_t p = 0; p < 12; ++p) {
        for (size_t v = 0; v < 256; ++v) {
            identical = identical && a.table(p)[v] == b.table(p)[v];
            differs = differs || a.table(p)[v] != c.table(p)[v];
        }
    }
    CHECK(identical);
    CHECK(differs);
}

TEST_CASE("tabulation hash equals prefix xor suffix") {
    const TabulationHash h(42);
    Rng rng(1);
    for (int trial = 0; trial < 1000; ++trial) {
        const uint64_t fp = rng.next_u64();
        const uint32_t v = static_cast<uint32_t>(rng.next_u64());
        uint8_t bytes[12];
        for (int i = 0; i < 8; ++i) bytes[i] = static_cast<uint8_t>(fp >> (8 * i));
        for (int i = 0; i < 4; ++i) bytes[8 + i] = static_cast<uint8_t>(v >> (8 * i));
        Tabulation<12> raw(42);
        CHECK(h(fp, v) == raw.hash_bytes(bytes));
        CHECK(h(fp, v) == (h.prefix(fp) ^ h.suffix(v)));
    }
}

TEST_CASE("tabulation_fold matches materialized tables; empty input is 0") {
    Rng rng(2);
    for (int trial = 0; trial < 200; ++trial) {
        const uint64_t seed = rng.next_u64();
        uint8_t bytes[12];
        for (auto& byte : bytes) byte = static_cast<uint8_t>(rng.next_u64());
        const Tabulation<12> tab(seed);
        CHECK(tabulation_fold(seed, bytes, 12) == tab.hash_bytes(bytes));
    }
    CHECK(tabulation_fold(123, nullptr, 0) == 0);
}

TEST_CASE("threshold_value is deterministic and uniform") {
    const TabulationHash h(7);
    const PathFingerprint fp{0x123456789abcdef0ull, 3};
    CHECK(threshold_value(h, fp, 99) == threshold_value(h, fp, 99));

    // Monte Carlo uniformity over 10^6 random (fingerprint, vertex) pairs.
    Rng rng(3);
    const int n = 1'000'000;
    double sum = 0.0;
    int below_quarter = 0;
    for (int i = 0; i < n; ++i) {
        const double u = threshold_value(
            h, PathFingerprint{rng.next_u64(), 0},
            static_cast<uint32_t>(rng.next_u64()));
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        sum += u;
        if (u < 0.25) ++below_quarter;
    }
    CHECK(std::abs(sum / n - 0.5) <= 0.002);
    CHECK(std::abs(below_quarter / static_cast<double>(n) - 0.25) <= 0.002);
}

TEST_CASE("extend_fingerprint: determinism, depth, collision-freeness") {
    const TabulationHash h(11);
    const PathFingerprint root = root_fingerprint(5);
    CHECK(root.value == 5);
    CHECK(root.depth == 0);

    const auto child = extend_fingerprint(h, root, 17);
    CHECK(child == extend_fingerprint(h, root, 17));
    CHECK(child.depth == 1);

    // Distinct vertices from the same parent give distinct children; expect
    // zero collisions over 10^5 trials.
    std::set<uint64_t> seen;
    for (uint32_t v = 0; v < 100'000; ++v)
        seen.insert(extend_fingerprint(h, root, v).value);
    CHECK(seen.size() == 100'000);
}

TEST_CASE("pairwise independence proxy over random table seeds") {
    // For fixed distinct inputs a != b, Pr[h(a) < alpha and h(b) < alpha']
    // should match alpha * alpha' over the seed distribution.
    const double alpha = 0.5, alpha_prime = 0.25;
    const int n = 20'000;
    int joint = 0;
    Rng rng(17);
    for (int i = 0; i < n; ++i) {
        const TabulationHash h(rng.next_u64());
        const double ua = threshold_value(h, PathFingerprint{1, 0}, 7);
        const double ub = threshold_value(h, PathFingerprint{2, 0}, 7);
        if (ua < alpha && ub < alpha_prime) ++joint;
    }
    const double p = alpha * alpha_prime;
    const double sigma = std::sqrt(p * (1 - p) / n);
    CHECK(std::abs(joint / static_cast<double>(n) - p) <= 3 * sigma);
}

TEST_CASE("to_unit uses the top 53 bits exactly") {
    CHECK(to_unit(0) == 0.0);
    CHECK(to_unit(~0ull) == (static_cast<double>((1ull << 53) - 1) * 0x1.0p-53));
    CHECK(to_unit(1ull << 11) == 0x1.0p-53);
}
