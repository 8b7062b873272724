#pragma once

#include <cstdint>
#include <vector>

#include "cpath/hashing.hpp"
#include "cpath/sparse_set.hpp"

namespace cpath {

/// Parameters of one Chosen Path map instance. Level seeds are derived from
/// the master seed by the documented split level_seeds[i] = master ^ (i+1);
/// each level then re-tabulates from its seed, so the per-level hash
/// functions are mutually independent.
struct ChosenPathParams {
    double b1 = 0.5;
    uint32_t k = 1;
    uint32_t w = 2;
    uint64_t master_seed = 0;
    std::vector<uint64_t> level_seeds;

    friend bool operator==(const ChosenPathParams&, const ChosenPathParams&) = default;
};

std::vector<uint64_t> derive_level_seeds(uint64_t master_seed, uint32_t k);

/// Chooses depth k = ceil(ln n / ln(1/b2)) and width w = 2k, clamping k to at
/// least 1 so the map stays nontrivial for n = 1. Natural logarithms; any
/// fixed base gives the same ratio.
ChosenPathParams params_for(uint64_t n, double b1, double b2, uint64_t master_seed);

/// The depth-k survivors of the branching process, as sorted duplicate-free
/// 64-bit path fingerprints.
struct PathSet {
    uint32_t depth = 0;
    std::vector<uint64_t> fingerprints;
};

struct EvalLimits {
    // Expected frontier sizes are small, but the worst case is unbounded;
    // a single evaluation aborts with BlowupError past this many live paths.
    size_t max_frontier = 1'000'000;
};

/// One sampled map M of the Chosen Path family. Evaluation runs the branching
/// process breadth-first: level 0 holds the w root fingerprints 0..w-1; at
/// level i a surviving path p spawns the child p∘j for each j in x with
/// threshold_value(h_i, p, j) < min(1, 1/(b1 |x|)). Deterministic given
/// (params, x); immutable and safe for concurrent evaluation.
class ChosenPathMap {
  public:
    explicit ChosenPathMap(ChosenPathParams params, EvalLimits limits = {});

    const ChosenPathParams& params() const { return params_; }

    PathSet evaluate(const SparseSet& x) const;

    /// The depth-k survivors in frontier order, without the final
    /// sort/dedupe. Distinct surviving paths give distinct values except for
    /// 2^-64 fingerprint collisions, so this is the same multiset evaluate()
    /// canonicalizes; batch probing uses it to skip the per-point sort.
    std::vector<uint64_t> evaluate_raw(const SparseSet& x) const;

    /// The survival hash h_i for level i in 1..k (index i-1 here).
    const TabulationHash& survival_hash(uint32_t level_index) const {
        return levels_[level_index].survive;
    }
    /// The fingerprint-extension hash for the same level.
    const TabulationHash& extension_hash(uint32_t level_index) const {
        return levels_[level_index].extend;
    }

    // Extension hashes are seeded with level_seed ^ kExtendSalt so that the
    // survival test and the child fingerprint use independent tables.
    static constexpr uint64_t kExtendSalt = 0x5851F42D4C957F2Dull;

  private:
    struct Level {
        TabulationHash survive;
        TabulationHash extend;
    };

    ChosenPathParams params_;
    EvalLimits limits_;
    std::vector<Level> levels_;
};

PathSet evaluate_map(const ChosenPathParams& params, const SparseSet& x,
                     EvalLimits limits = {});

/// The analytic per-level values used by the verification harness:
/// expected size (1/b1)^i w, expected shared paths (B/b1)^i w at pair
/// similarity B, and the collision lower bound w/(i+w) for B >= b1.
struct ExpectedBounds {
    double size_bound = 0.0;
    double intersection_bound = 0.0;
    double collision_lower_bound = 0.0;
};

ExpectedBounds expected_bounds(const ChosenPathParams& params, uint32_t level,
                               double similarity);

/// |A ∩ B| for two sorted fingerprint lists.
size_t shared_fingerprints(const PathSet& a, const PathSet& b);

}  // namespace cpath
