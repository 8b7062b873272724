#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "cpath/hashing.hpp"
#include "cpath/set_io.hpp"
#include "cpath/sparse_set.hpp"

namespace cpath {

/// Converts a locality-sensitive map into a single-valued hash: the map
/// output is padded with per-point sentinel elements to exactly m = ceil(8 m1)
/// elements (or replaced by m sentinels when the map output is at least m),
/// and the hash is the element minimizing a random 64-bit total order.
/// Two inputs collide when they agree on the winning element; sentinel
/// identities are per-point, so inputs with empty map outputs never collide.
class PaddedMapHash {
  public:
    using MapEval = std::function<std::vector<uint64_t>(const SparseSet&)>;

    PaddedMapHash(MapEval map_eval, double m1_bound, uint64_t order_seed);

    uint64_t padded_size() const { return m_; }

    /// The winning element of the padded set (ties on the order value break
    /// by element value).
    uint64_t operator()(const SparseSet& x) const;

    // Sentinel c for a point with content fingerprint f is
    // mix64(f + c * gamma); content fingerprints come from tabulation_fold
    // over the element bytes with this fixed seed.
    static constexpr uint64_t kPointFingerprintSeed = 0x1BADB002CAFEF00Dull;

  private:
    MapEval eval_;
    uint64_t m_;
    Tabulation<8> order_;
};

/// Parameters of the Hamming-to-Braun-Blanquet transform. The output space
/// has `blocks` blocks of `width` positions each (dimension blocks*width);
/// each block reads `samples` source coordinates and one-hots a hash of the
/// sampled bit string into its block.
struct TransformParams {
    uint64_t source_dim = 0;  // D
    uint32_t blocks = 0;      // t
    uint32_t width = 0;       // l
    uint32_t samples = 0;     // tau
    double epsilon = 0.0;
    uint64_t seed = 0;

    /// tau = floor(sqrt(D) ln(1/(b1+eps))), l = ceil(8/eps), t = floor(d/l)
    /// for a target output dimension d.
    static TransformParams derive(uint64_t source_dim, uint32_t out_dim,
                                  double b1, double epsilon, uint64_t seed);
};

class TransformT {
  public:
    explicit TransformT(TransformParams params);

    const TransformParams& params() const { return params_; }
    uint32_t output_dim() const { return params_.blocks * params_.width; }

    /// Always returns exactly one element per block.
    SparseSet apply(const DenseBits& x) const;

  private:
    TransformParams params_;
    std::vector<uint32_t> sample_indices_;  // blocks * samples, block-major
    std::vector<uint64_t> block_seeds_;     // per-block universe-reduction hash
};

/// Partition keyed by floor(log2 |x|); class i holds the ids of points with
/// size in [2^i, 2^(i+1)). Empty sets are rejected.
std::map<uint32_t, std::vector<uint32_t>> split_by_size(
    std::span<const SparseSet> points);

struct IntersectionThresholds {
    uint32_t i1 = 0;
    uint32_t i2 = 0;
};

/// For a nondecreasing intersection-to-similarity function f on 0..i_max,
/// returns i1 = min{i | f(i) >= s1} and i2 = min{i | f(i) > s2}. Throws
/// InfeasibleError when s1 is unattainable.
IntersectionThresholds threshold_translate(
    const std::function<double(uint32_t)>& f, uint32_t i_max, double s1,
    double s2);

/// OR-compression dimension reduction for one size class: output coordinate j
/// is the OR of the input coordinates in a sampled set I_j, with
/// |I_j| = ceil(d / (2^(i+1) ln n)) so that an output coordinate is set with
/// probability about 1/ln n at the top of the class. Natural logarithm.
class DimensionReducer {
  public:
    DimensionReducer(uint32_t input_dim, uint32_t output_dim,
                     uint32_t size_class, double n, uint64_t seed);

    uint32_t output_dim() const { return static_cast<uint32_t>(groups_.size()); }
    uint32_t group_size() const { return group_size_; }
    const std::vector<uint32_t>& group(uint32_t j) const { return groups_[j]; }

    SparseSet apply(const SparseSet& x) const;

  private:
    uint32_t input_dim_ = 0;
    uint32_t group_size_ = 0;
    std::vector<std::vector<uint32_t>> groups_;
};

std::vector<SparseSet> dimension_reduce(std::span<const SparseSet> class_points,
                                        uint32_t input_dim, uint32_t output_dim,
                                        uint32_t size_class, double n,
                                        uint64_t seed);

}  // namespace cpath
