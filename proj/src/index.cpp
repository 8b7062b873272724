#include "cpath/index.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "cpath/parallel.hpp"
#include "cpath/reductions.hpp"

namespace cpath {

uint32_t default_repetitions(size_t n) {
    const uint32_t ceil_log2 =
        n <= 1 ? 0 : static_cast<uint32_t>(std::bit_width(n - 1));
    return ceil_log2 + 2;
}

namespace {

void check_points_nonempty(const std::vector<SparseSet>& points) {
    for (size_t i = 0; i < points.size(); ++i)
        if (points[i].empty())
            throw ParameterError("point " + std::to_string(i) + " is empty");
}

std::vector<uint64_t> rep_seeds(uint64_t master_seed, uint32_t repetitions) {
    SplitMix64 stream(master_seed);
    std::vector<uint64_t> seeds(repetitions);
    for (auto& s : seeds) s = stream.next();
    return seeds;
}

using Entry = std::pair<uint64_t, uint32_t>;

// Fills one repetition's (fingerprint, id) entries, parallel over point
// chunks; the final sort makes the result independent of chunking.
std::vector<Entry> build_rep_entries(const ChosenPathMap& map,
                                     std::span<const SparseSet> points,
                                     size_t threads) {
    std::vector<std::vector<Entry>> chunks(
        std::min(points.size(), threads == 0 ? default_threads() : threads));
    if (chunks.empty()) return {};
    parallel_chunks(points.size(), chunks.size(),
                    [&](size_t chunk, size_t begin, size_t end) {
                        auto& out = chunks[chunk];
                        for (size_t id = begin; id < end; ++id) {
                            const PathSet ps = map.evaluate(points[id]);
                            for (uint64_t fp : ps.fingerprints)
                                out.emplace_back(fp, static_cast<uint32_t>(id));
                        }
                    });
    size_t total = 0;
    for (const auto& c : chunks) total += c.size();
    std::vector<Entry> entries;
    entries.reserve(total);
    for (auto& c : chunks) {
        entries.insert(entries.end(), c.begin(), c.end());
        c.clear();
        c.shrink_to_fit();
    }
    std::sort(entries.begin(), entries.end());
    return entries;
}

std::span<const Entry> bucket_range(const std::vector<Entry>& entries, uint64_t fp) {
    const auto lo = std::lower_bound(
        entries.begin(), entries.end(), fp,
        [](const Entry& e, uint64_t key) { return e.first < key; });
    auto hi = lo;
    while (hi != entries.end() && hi->first == fp) ++hi;
    return {lo, hi};
}

}  // namespace

CPIndex CPIndex::build(std::vector<SparseSet> points, double b1, double b2,
                       uint32_t repetitions, uint64_t master_seed,
                       size_t threads) {
    if (repetitions < 1) throw ParameterError("cp_build: need at least 1 repetition");
    check_points_nonempty(points);

    CPIndex index;
    index.b1_ = b1;
    index.b2_ = b2;
    index.points_ = std::move(points);

    const uint64_t n_eff = std::max<uint64_t>(index.points_.size(), 1);
    const auto seeds = rep_seeds(master_seed, repetitions);
    index.reps_.reserve(repetitions);
    for (uint32_t r = 0; r < repetitions; ++r) {
        Rep rep;
        rep.params = params_for(n_eff, b1, b2, seeds[r]);
        const ChosenPathMap map(rep.params);
        rep.entries = build_rep_entries(map, index.points_, threads);
        index.reps_.push_back(std::move(rep));
    }
    index.rebuild_maps();
    return index;
}

void CPIndex::rebuild_maps() {
    maps_.clear();
    maps_.reserve(reps_.size());
    for (const auto& rep : reps_) maps_.emplace_back(rep.params);
}

QueryOutcome CPIndex::query(const SparseSet& q) const {
    QueryOutcome outcome;
    std::vector<uint8_t> visited(points_.size(), 0);
    for (size_t r = 0; r < reps_.size(); ++r) {
        const PathSet ps = maps_[r].evaluate(q);
        for (uint64_t fp : ps.fingerprints) {
            ++outcome.buckets_probed;
            for (const auto& [efp, id] : bucket_range(reps_[r].entries, fp)) {
                (void)efp;
                if (visited[id]) continue;
                visited[id] = 1;
                ++outcome.candidates_scanned;
                const double s = braun_blanquet(q, points_[id]);
                if (s > b2_) {
                    outcome.found = id;
                    outcome.similarity = s;
                    return outcome;
                }
            }
        }
    }
    return outcome;
}

uint64_t CPIndex::total_entries() const {
    uint64_t total = 0;
    for (const auto& rep : reps_) total += rep.entries.size();
    return total;
}

uint64_t CPIndex::total_buckets() const {
    uint64_t total = 0;
    for (const auto& rep : reps_) {
        uint64_t buckets = 0;
        uint64_t prev = 0;
        bool first = true;
        for (const auto& [fp, id] : rep.entries) {
            (void)id;
            if (first || fp != prev) ++buckets;
            prev = fp;
            first = false;
        }
        total += buckets;
    }
    return total;
}

// ---------------------------------------------------------------------------
// Snapshot format (all integers and doubles little-endian):
//   "CPIX", u16 version,
//   f64 b1, f64 b2, u32 R,
//   per repetition: u32 k, u32 w, f64 b1, u64 master_seed, u64 level_seeds[k],
//                   u64 bucket_count,
//                   per bucket (ascending fingerprint): u64 fp, u32 count,
//                                                       u32 ids[count] (ascending),
//   u32 n, per point: u32 length, u32 elements[length].
// ---------------------------------------------------------------------------

namespace {

constexpr uint16_t kSnapshotVersion = 1;

void put_bytes(std::ostream& out, const void* data, size_t len) {
    out.write(static_cast<const char*>(data), static_cast<std::streamsize>(len));
}

template <typename T>
void put_le(std::ostream& out, T value) {
    uint8_t bytes[sizeof(T)];
    uint64_t v;
    if constexpr (std::is_same_v<T, double>) {
        v = std::bit_cast<uint64_t>(value);
    } else {
        v = static_cast<uint64_t>(value);
    }
    for (size_t i = 0; i < sizeof(T); ++i) bytes[i] = static_cast<uint8_t>(v >> (8 * i));
    put_bytes(out, bytes, sizeof(T));
}

template <typename T>
T get_le(std::istream& in) {
    uint8_t bytes[sizeof(T)];
    in.read(reinterpret_cast<char*>(bytes), sizeof(T));
    if (!in) throw DataError("snapshot truncated");
    uint64_t v = 0;
    for (size_t i = 0; i < sizeof(T); ++i) v |= static_cast<uint64_t>(bytes[i]) << (8 * i);
    if constexpr (std::is_same_v<T, double>) return std::bit_cast<double>(v);
    else return static_cast<T>(v);
}

}  // namespace

void CPIndex::save(std::ostream& out) const {
    put_bytes(out, "CPIX", 4);
    put_le<uint16_t>(out, kSnapshotVersion);
    put_le<double>(out, b1_);
    put_le<double>(out, b2_);
    put_le<uint32_t>(out, repetitions());
    for (const auto& rep : reps_) {
        put_le<uint32_t>(out, rep.params.k);
        put_le<uint32_t>(out, rep.params.w);
        put_le<double>(out, rep.params.b1);
        put_le<uint64_t>(out, rep.params.master_seed);
        for (uint64_t seed : rep.params.level_seeds) put_le<uint64_t>(out, seed);

        uint64_t buckets = 0;
        for (size_t i = 0; i < rep.entries.size();) {
            size_t j = i;
            while (j < rep.entries.size() && rep.entries[j].first == rep.entries[i].first) ++j;
            ++buckets;
            i = j;
        }
        put_le<uint64_t>(out, buckets);
        for (size_t i = 0; i < rep.entries.size();) {
            size_t j = i;
            while (j < rep.entries.size() && rep.entries[j].first == rep.entries[i].first) ++j;
            put_le<uint64_t>(out, rep.entries[i].first);
            put_le<uint32_t>(out, static_cast<uint32_t>(j - i));
            for (size_t e = i; e < j; ++e) put_le<uint32_t>(out, rep.entries[e].second);
            i = j;
        }
    }
    put_le<uint32_t>(out, static_cast<uint32_t>(points_.size()));
    for (const auto& point : points_) {
        put_le<uint32_t>(out, static_cast<uint32_t>(point.size()));
        for (uint32_t dim : point.dims()) put_le<uint32_t>(out, dim);
    }
}

uint64_t CPIndex::snapshot_bytes() const {
    uint64_t bytes = 4 + 2 + 8 + 8 + 4;  // magic, version, thresholds, R
    for (const auto& rep : reps_) {
        bytes += 4 + 4 + 8 + 8;                             // k, w, b1, seed
        bytes += 8ull * rep.params.level_seeds.size() + 8;  // seeds, bucket count
        uint64_t buckets = 0;
        for (size_t i = 0; i < rep.entries.size();) {
            size_t j = i;
            while (j < rep.entries.size() && rep.entries[j].first == rep.entries[i].first) ++j;
            ++buckets;
            i = j;
        }
        bytes += 12ull * buckets;               // u64 fp + u32 count each
        bytes += 4ull * rep.entries.size();     // ids
    }
    bytes += 4;  // point count
    for (const auto& point : points_) bytes += 4 + 4ull * point.size();
    return bytes;
}

CPIndex CPIndex::load(std::istream& in) {
    char magic[4];
    in.read(magic, 4);
    if (!in || std::string(magic, 4) != "CPIX")
        throw DataError("snapshot: bad magic");
    const uint16_t version = get_le<uint16_t>(in);
    if (version != kSnapshotVersion)
        throw DataError("snapshot: unsupported version " + std::to_string(version));

    CPIndex index;
    index.b1_ = get_le<double>(in);
    index.b2_ = get_le<double>(in);
    const uint32_t repetitions = get_le<uint32_t>(in);
    index.reps_.resize(repetitions);
    for (auto& rep : index.reps_) {
        rep.params.k = get_le<uint32_t>(in);
        rep.params.w = get_le<uint32_t>(in);
        rep.params.b1 = get_le<double>(in);
        rep.params.master_seed = get_le<uint64_t>(in);
        rep.params.level_seeds.resize(rep.params.k);
        for (auto& seed : rep.params.level_seeds) seed = get_le<uint64_t>(in);

        const uint64_t buckets = get_le<uint64_t>(in);
        for (uint64_t b = 0; b < buckets; ++b) {
            const uint64_t fp = get_le<uint64_t>(in);
            const uint32_t count = get_le<uint32_t>(in);
            for (uint32_t c = 0; c < count; ++c)
                rep.entries.emplace_back(fp, get_le<uint32_t>(in));
        }
        if (!std::is_sorted(rep.entries.begin(), rep.entries.end()))
            throw DataError("snapshot: bucket entries out of order");
    }
    const uint32_t n = get_le<uint32_t>(in);
    index.points_.reserve(n);
    for (uint32_t i = 0; i < n; ++i) {
        const uint32_t len = get_le<uint32_t>(in);
        std::vector<uint32_t> dims(len);
        for (auto& dim : dims) dim = get_le<uint32_t>(in);
        index.points_.push_back(SparseSet::from_sorted(std::move(dims)));
    }
    index.rebuild_maps();
    return index;
}

void CPIndex::save_file(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot open " + path + " for writing");
    save(out);
    if (!out) throw DataError("failed writing " + path);
}

CPIndex CPIndex::load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open " + path);
    return load(in);
}

// ---------------------------------------------------------------------------
// MinHash baseline
// ---------------------------------------------------------------------------

namespace {

constexpr uint64_t kMinHashKeyInit = 0x2545F4914F6CDD1Dull;
constexpr uint32_t kMaxMinHashReps = 1'000'000;

}  // namespace

MinHashIndex MinHashIndex::build(std::vector<SparseSet> points, double j1,
                                 double j2, uint64_t master_seed, size_t threads) {
    if (!(0.0 < j2 && j2 < j1 && j1 < 1.0))
        throw ParameterError("minhash_build: need 0 < j2 < j1 < 1");
    check_points_nonempty(points);

    MinHashIndex index;
    index.j1_ = j1;
    index.j2_ = j2;
    index.points_ = std::move(points);

    const double n_eff = static_cast<double>(std::max<size_t>(index.points_.size(), 1));
    index.concat_length_ = static_cast<uint32_t>(
        std::max(1.0, std::ceil(std::log(n_eff) / std::log(1.0 / j2))));
    const double rho_mh = std::log(1.0 / j1) / std::log(1.0 / j2);
    const double reps_raw = std::ceil(3.0 * std::pow(n_eff, rho_mh));
    if (!(reps_raw <= kMaxMinHashReps))
        throw ParameterError("minhash_build: repetition count exceeds safety cap");
    const uint32_t L = static_cast<uint32_t>(std::max(1.0, reps_raw));

    SplitMix64 stream(master_seed);
    index.slot_hashes_.reserve(static_cast<size_t>(L) * index.concat_length_);
    for (uint32_t i = 0; i < L * index.concat_length_; ++i)
        index.slot_hashes_.emplace_back(stream.next());

    index.reps_.resize(L);
    parallel_chunks(L, threads, [&](size_t, size_t begin, size_t end) {
        for (size_t r = begin; r < end; ++r) {
            auto& entries = index.reps_[r].entries;
            entries.reserve(index.points_.size());
            for (uint32_t id = 0; id < index.points_.size(); ++id)
                entries.emplace_back(
                    index.bucket_key(index.points_[id], static_cast<uint32_t>(r)), id);
            std::sort(entries.begin(), entries.end());
        }
    });
    return index;
}

uint64_t MinHashIndex::bucket_key(const SparseSet& x, uint32_t rep) const {
    uint64_t key = kMinHashKeyInit;
    for (uint32_t s = 0; s < concat_length_; ++s) {
        const ElementHash& h = slot_hashes_[static_cast<size_t>(rep) * concat_length_ + s];
        uint64_t min_value = std::numeric_limits<uint64_t>::max();
        for (uint32_t element : x.dims()) min_value = std::min(min_value, h(element));
        key = mix64(key ^ min_value);
    }
    return key;
}

QueryOutcome MinHashIndex::query(const SparseSet& q) const {
    QueryOutcome outcome;
    std::vector<uint8_t> visited(points_.size(), 0);
    for (uint32_t r = 0; r < reps_.size(); ++r) {
        const uint64_t key = bucket_key(q, r);
        ++outcome.buckets_probed;
        for (const auto& [ekey, id] : bucket_range(reps_[r].entries, key)) {
            (void)ekey;
            if (visited[id]) continue;
            visited[id] = 1;
            ++outcome.candidates_scanned;
            const double s = jaccard(q, points_[id]);
            if (s > j2_) {
                outcome.found = id;
                outcome.similarity = s;
                return outcome;
            }
        }
    }
    return outcome;
}

// ---------------------------------------------------------------------------
// Brute force oracle
// ---------------------------------------------------------------------------

BruteForceResult brute_force(std::span<const SparseSet> points,
                             const SparseSet& q, MeasureKind measure) {
    if (points.empty()) throw ParameterError("brute_force: no points");
    BruteForceResult best{0, similarity(measure, q, points[0])};
    for (uint32_t id = 1; id < points.size(); ++id) {
        const double s = similarity(measure, q, points[id]);
        if (s > best.similarity) best = {id, s};
    }
    return best;
}

// ---------------------------------------------------------------------------
// Repetition-streamed batched queries
// ---------------------------------------------------------------------------

namespace {

struct Hit {
    uint64_t fp;
    uint32_t id;

    friend bool operator<(const Hit& a, const Hit& b) {
        return a.fp != b.fp ? a.fp < b.fp : a.id < b.id;
    }
};

}  // namespace

BatchResult cp_batch_query(std::span<const SparseSet> points,
                           std::span<const SparseSet> queries, double b1,
                           double b2, uint32_t repetitions, uint64_t master_seed,
                           size_t threads, std::span<const WatchPair> watch) {
    if (repetitions < 1) throw ParameterError("cp_batch_query: need at least 1 repetition");
    for (size_t i = 0; i < points.size(); ++i)
        if (points[i].empty())
            throw ParameterError("point " + std::to_string(i) + " is empty");

    BatchResult result;
    result.outcomes.resize(queries.size());
    result.watch_rep_hits.assign(watch.size(), 0);
    if (queries.empty()) return result;

    const uint64_t n_eff = std::max<uint64_t>(points.size(), 1);
    const auto seeds = rep_seeds(master_seed, repetitions);
    const size_t num_threads = threads == 0 ? default_threads() : threads;

    std::vector<uint8_t> done(queries.size(), 0);
    const size_t words = (points.size() + 63) / 64;
    std::vector<std::vector<uint64_t>> visited(queries.size(),
                                               std::vector<uint64_t>(words, 0));

    std::vector<PathSet> query_paths(queries.size());
    std::vector<std::vector<Hit>> query_hits(queries.size());

    for (uint32_t r = 0; r < repetitions; ++r) {
        const ChosenPathMap map(params_for(n_eff, b1, b2, seeds[r]));

        parallel_chunks(queries.size(), num_threads,
                        [&](size_t, size_t begin, size_t end) {
                            for (size_t qi = begin; qi < end; ++qi)
                                query_paths[qi] = map.evaluate(queries[qi]);
                        });

        // (fingerprint, query) probe table over all queries, plus a bitmask
        // prefilter on the top fingerprint bits so misses cost one load.
        std::vector<std::pair<uint64_t, uint32_t>> probe;
        {
            size_t total = 0;
            for (const auto& ps : query_paths) total += ps.fingerprints.size();
            probe.reserve(total);
            for (uint32_t qi = 0; qi < query_paths.size(); ++qi)
                for (uint64_t fp : query_paths[qi].fingerprints)
                    probe.emplace_back(fp, qi);
            std::sort(probe.begin(), probe.end());
        }
        uint32_t filter_shift = 64;
        {
            uint64_t want = std::max<uint64_t>(probe.size() * 16, 1u << 16);
            uint32_t bits = 16;
            while ((1ull << bits) < want && bits < 28) ++bits;
            filter_shift = 64 - bits;
        }
        std::vector<uint64_t> filter((1ull << (64 - filter_shift)) / 64 + 1, 0);
        for (const auto& [fp, qi] : probe) {
            (void)qi;
            const uint64_t key = fp >> filter_shift;
            filter[key / 64] |= 1ull << (key % 64);
        }

        // Stream the points of this repetition against the probe table.
        const size_t chunks = std::min(points.size(), num_threads);
        std::vector<std::vector<std::tuple<uint32_t, uint64_t, uint32_t>>> found(
            std::max<size_t>(chunks, 1));
        parallel_chunks(points.size(), chunks, [&](size_t chunk, size_t begin, size_t end) {
            auto& out = found[chunk];
            for (size_t id = begin; id < end; ++id) {
                for (uint64_t fp : map.evaluate_raw(points[id])) {
                    const uint64_t key = fp >> filter_shift;
                    if (!(filter[key / 64] & (1ull << (key % 64)))) continue;
                    auto it = std::lower_bound(
                        probe.begin(), probe.end(),
                        std::pair<uint64_t, uint32_t>{fp, 0});
                    for (; it != probe.end() && it->first == fp; ++it)
                        out.emplace_back(it->second, fp, static_cast<uint32_t>(id));
                }
            }
        });

        for (auto& hits : query_hits) hits.clear();
        for (const auto& chunk : found)
            for (const auto& [qi, fp, id] : chunk)
                query_hits[qi].push_back(Hit{fp, id});
        for (auto& hits : query_hits) std::sort(hits.begin(), hits.end());

        for (size_t wi = 0; wi < watch.size(); ++wi) {
            const auto& pair = watch[wi];
            if (pair.query_index >= query_hits.size()) continue;
            for (const Hit& hit : query_hits[pair.query_index]) {
                if (hit.id == pair.point_id) {
                    ++result.watch_rep_hits[wi];
                    break;
                }
            }
        }

        // Advance outcomes exactly as CPIndex::query would: fingerprints in
        // ascending order, bucket ids ascending, visited marks across the
        // whole query, return on the first candidate above b2.
        for (uint32_t qi = 0; qi < queries.size(); ++qi) {
            if (done[qi]) continue;
            QueryOutcome& outcome = result.outcomes[qi];
            const auto& fps = query_paths[qi].fingerprints;
            bool hit_found = false;
            for (const Hit& hit : query_hits[qi]) {
                const uint64_t word = hit.id / 64;
                const uint64_t bit = 1ull << (hit.id % 64);
                if (visited[qi][word] & bit) continue;
                visited[qi][word] |= bit;
                ++outcome.candidates_scanned;
                const double s = braun_blanquet(queries[qi], points[hit.id]);
                if (s > b2) {
                    outcome.found = hit.id;
                    outcome.similarity = s;
                    // Probes up to and including the winning fingerprint.
                    const auto pos = std::lower_bound(fps.begin(), fps.end(), hit.fp);
                    outcome.buckets_probed +=
                        static_cast<uint64_t>(pos - fps.begin()) + 1;
                    done[qi] = 1;
                    hit_found = true;
                    break;
                }
            }
            if (!hit_found) outcome.buckets_probed += fps.size();
        }
    }
    return result;
}

// ---------------------------------------------------------------------------
// Benchmark instances
// ---------------------------------------------------------------------------

namespace {

SparseSet range_block(uint32_t base, uint32_t count) {
    std::vector<uint32_t> dims(count);
    for (uint32_t e = 0; e < count; ++e) dims[e] = base + e;
    return SparseSet::from_sorted(std::move(dims));
}

// `shared` elements sampled without replacement from the query's block plus
// fresh private elements.
SparseSet overlap_set(uint32_t query_base, uint32_t t, uint32_t shared,
                      uint32_t private_base, uint32_t private_count,
                      uint64_t seed) {
    std::vector<uint32_t> dims;
    dims.reserve(shared + private_count);
    Rng rng(mix64(seed));
    std::vector<uint8_t> taken(t, 0);
    for (uint32_t picked = 0; picked < shared;) {
        const uint32_t offset = static_cast<uint32_t>(rng.below(t));
        if (taken[offset]) continue;
        taken[offset] = 1;
        dims.push_back(query_base + offset);
        ++picked;
    }
    for (uint32_t e = 0; e < private_count; ++e)
        dims.push_back(private_base + e);
    return SparseSet::from_unsorted(std::move(dims));
}

}  // namespace

PlantedInstance make_planted_instance(size_t n_decoys, size_t trials, uint32_t t,
                                      double b1, double b2, uint64_t seed) {
    if (!(0.0 < b2 && b2 < b1 && b1 < 1.0))
        throw ParameterError("planted instance: need 0 < b2 < b1 < 1");
    if (t < 2) throw ParameterError("planted instance: need t >= 2");

    PlantedInstance inst;
    inst.t = t;
    // Intersection thresholds from the equal-size Braun-Blanquet translation:
    // the planted pair sits exactly at the smallest passing overlap, decoys
    // at the largest overlap still filtered out.
    const auto cutoffs = threshold_translate(
        [t](uint32_t i) { return static_cast<double>(i) / t; }, t, b1, b2);
    inst.planted_overlap = cutoffs.i1;
    inst.decoy_overlap = cutoffs.i2 - 1;
    if (inst.planted_overlap <= inst.decoy_overlap || inst.planted_overlap > t)
        throw ParameterError("planted instance: thresholds too close for this t");

    // Disjoint element ranges: query blocks, planted privates, decoy privates.
    const uint32_t query_base = t;
    const uint32_t planted_base = query_base + static_cast<uint32_t>(trials) * t;
    const uint32_t decoy_base = planted_base + static_cast<uint32_t>(trials) * t;

    for (size_t j = 0; j < n_decoys; ++j) {
        const uint32_t group =
            trials == 0 ? 0 : static_cast<uint32_t>(j % trials);
        const uint32_t shared = trials == 0 ? 0 : inst.decoy_overlap;
        inst.points.push_back(overlap_set(
            query_base + group * t, t, shared,
            decoy_base + static_cast<uint32_t>(j) * t, t - shared,
            seed ^ (0x0DECull << 32) ^ j));
    }

    for (size_t i = 0; i < trials; ++i) {
        const uint32_t qbase = query_base + static_cast<uint32_t>(i) * t;
        inst.queries.push_back(range_block(qbase, t));
        // The first planted_overlap elements of the query plus fresh ones.
        std::vector<uint32_t> dims;
        for (uint32_t e = 0; e < inst.planted_overlap; ++e)
            dims.push_back(qbase + e);
        for (uint32_t e = 0; e < t - inst.planted_overlap; ++e)
            dims.push_back(planted_base + static_cast<uint32_t>(i) * t + e);
        inst.points.push_back(SparseSet::from_sorted(std::move(dims)));
        inst.planted_ids.push_back(static_cast<uint32_t>(n_decoys + i));
    }
    return inst;
}

DecoyInstance make_decoy_instance(size_t n_points, size_t n_queries, uint32_t t,
                                  uint32_t shared, uint64_t seed) {
    if (shared >= t) throw ParameterError("decoy instance: need shared < t");
    if (n_queries == 0) throw ParameterError("decoy instance: need a query");
    DecoyInstance inst;
    const uint32_t query_base = t;
    const uint32_t point_base = query_base + static_cast<uint32_t>(n_queries) * t;
    for (size_t i = 0; i < n_queries; ++i)
        inst.queries.push_back(
            range_block(query_base + static_cast<uint32_t>(i) * t, t));
    for (size_t j = 0; j < n_points; ++j) {
        const uint32_t group = static_cast<uint32_t>(j % n_queries);
        inst.points.push_back(overlap_set(
            query_base + group * t, t, shared,
            point_base + static_cast<uint32_t>(j) * t, t - shared,
            seed ^ (0x0B5Cull << 32) ^ j));
    }
    return inst;
}

}  // namespace cpath
