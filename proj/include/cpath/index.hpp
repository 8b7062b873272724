#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cpath/chosen_path.hpp"
#include "cpath/measures.hpp"

namespace cpath {

struct QueryOutcome {
    std::optional<uint32_t> found;
    double similarity = 0.0;          // of the returned point, 0 when not found
    uint64_t candidates_scanned = 0;  // distinct similarity computations
    uint64_t buckets_probed = 0;      // fingerprint lookups performed
};

/// Default repetition count ceil(log2 n) + 2, putting the per-query failure
/// probability at about 1/(4n).
uint32_t default_repetitions(size_t n);

/// Chosen Path similarity-search index: R independent map instances, each
/// with a bucket table from path fingerprints to point ids. Buckets are kept
/// as per-repetition sorted (fingerprint, id) arrays; lookups are binary
/// searches, iteration order is canonical, and the layout matches the
/// snapshot format. Immutable after build; queries are pure reads.
class CPIndex {
  public:
    struct Rep {
        ChosenPathParams params;
        std::vector<std::pair<uint64_t, uint32_t>> entries;  // sorted by (fp, id)
    };

    /// Builds R map instances with rep master seeds drawn in order from a
    /// splitmix64 stream over `master_seed`, and inserts every point under
    /// its fingerprints in every repetition. Points must be nonempty.
    static CPIndex build(std::vector<SparseSet> points, double b1, double b2,
                         uint32_t repetitions, uint64_t master_seed,
                         size_t threads = 0);

    /// Scans bucket candidates repetition by repetition in (fingerprint, id)
    /// order and returns the first point with Braun-Blanquet similarity
    /// strictly above b2. Candidates are deduplicated across the whole query.
    QueryOutcome query(const SparseSet& q) const;

    void save(std::ostream& out) const;
    void save_file(const std::string& path) const;
    static CPIndex load(std::istream& in);
    static CPIndex load_file(const std::string& path);

    double b1() const { return b1_; }
    double b2() const { return b2_; }
    uint32_t repetitions() const { return static_cast<uint32_t>(reps_.size()); }
    size_t point_count() const { return points_.size(); }
    const SparseSet& point(uint32_t id) const { return points_[id]; }
    const std::vector<Rep>& reps() const { return reps_; }

    uint64_t total_entries() const;
    uint64_t total_buckets() const;
    uint64_t snapshot_bytes() const;

  private:
    double b1_ = 0.0, b2_ = 0.0;
    std::vector<Rep> reps_;
    std::vector<SparseSet> points_;
    std::vector<ChosenPathMap> maps_;  // one evaluator per repetition

    void rebuild_maps();
};

/// MinHash LSH baseline for Jaccard thresholds (j1, j2): K concatenated
/// min-hash values per bucket key, L = ceil(3 n^rho) repetitions with
/// rho = log(1/j1)/log(1/j2). The per-slot min-hash is the minimum of a
/// 2-independent 64-bit hash over the elements, the standard surrogate for a
/// random permutation.
class MinHashIndex {
  public:
    struct Rep {
        std::vector<std::pair<uint64_t, uint32_t>> entries;  // (key, id) sorted
    };

    static MinHashIndex build(std::vector<SparseSet> points, double j1, double j2,
                              uint64_t master_seed, size_t threads = 0);

    /// First stored point in the matching buckets with Jaccard similarity
    /// strictly above j2.
    QueryOutcome query(const SparseSet& q) const;

    double j1() const { return j1_; }
    double j2() const { return j2_; }
    uint32_t concat_length() const { return concat_length_; }
    uint32_t repetitions() const { return static_cast<uint32_t>(reps_.size()); }

    uint64_t bucket_key(const SparseSet& x, uint32_t rep) const;

  private:
    double j1_ = 0.0, j2_ = 0.0;
    uint32_t concat_length_ = 1;
    std::vector<ElementHash> slot_hashes_;  // repetition-major, L*K of them
    std::vector<Rep> reps_;
    std::vector<SparseSet> points_;
};

struct BruteForceResult {
    uint32_t id = 0;
    double similarity = 0.0;
};

/// Exact argmax by linear scan; ties break toward the lowest point id.
BruteForceResult brute_force(std::span<const SparseSet> points,
                             const SparseSet& q, MeasureKind measure);

/// A (query, point) pair whose per-repetition fingerprint collisions should
/// be recorded during a batched run.
struct WatchPair {
    uint32_t query_index = 0;
    uint32_t point_id = 0;
};

struct BatchResult {
    std::vector<QueryOutcome> outcomes;
    // Per watch pair: number of repetitions with a shared fingerprint.
    std::vector<uint32_t> watch_rep_hits;
};

/// Runs the queries against a Chosen Path index without materializing it:
/// repetitions are built one at a time, probed, and discarded, so memory
/// stays at one repetition instead of R. Outcomes (found ids, similarities,
/// counters) are identical to CPIndex::build + query with the same arguments.
BatchResult cp_batch_query(std::span<const SparseSet> points,
                           std::span<const SparseSet> queries, double b1,
                           double b2, uint32_t repetitions, uint64_t master_seed,
                           size_t threads = 0,
                           std::span<const WatchPair> watch = {});

/// Planted-pair benchmark instance. Point ids 0..n_decoys-1 are decoys;
/// planted points follow. Queries occupy disjoint element ranges. The
/// planted point of trial i intersects query i in exactly ceil(b1 t)
/// elements and no other query at all. Decoy j overlaps its assigned query
/// (round-robin) in exactly floor(b2 t) elements sampled per decoy, and no
/// other query, so ground truth is unambiguous and decoy collision events
/// stay decorrelated. The layout is deterministic given the seed; run
/// randomness comes from hash seeds.
struct PlantedInstance {
    std::vector<SparseSet> points;
    std::vector<SparseSet> queries;
    std::vector<uint32_t> planted_ids;
    uint32_t t = 0;
    uint32_t planted_overlap = 0;
    uint32_t decoy_overlap = 0;
};

PlantedInstance make_planted_instance(size_t n_decoys, size_t trials, uint32_t t,
                                      double b1, double b2, uint64_t seed = 1);

/// Decoy-only instance for work-scaling runs: point j intersects its
/// round-robin query in exactly `shared` sampled elements, other queries
/// not at all.
struct DecoyInstance {
    std::vector<SparseSet> points;
    std::vector<SparseSet> queries;
};

DecoyInstance make_decoy_instance(size_t n_points, size_t n_queries, uint32_t t,
                                  uint32_t shared, uint64_t seed = 1);

}  // namespace cpath
