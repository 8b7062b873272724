#include "cpath/verify.hpp"

#include <cmath>

#include "cpath/parallel.hpp"
#include "cpath/reductions.hpp"

namespace cpath {

namespace {

// x = {0..t-1}, y shares the first `overlap` elements and is disjoint above.
std::pair<SparseSet, SparseSet> overlap_pair(uint32_t t, uint32_t overlap) {
    std::vector<uint32_t> xs(t), ys;
    for (uint32_t e = 0; e < t; ++e) xs[e] = e;
    ys.reserve(t);
    for (uint32_t e = 0; e < overlap; ++e) ys.push_back(e);
    for (uint32_t e = 0; e < t - overlap; ++e) ys.push_back(t + e);
    return {SparseSet::from_sorted(std::move(xs)),
            SparseSet::from_sorted(std::move(ys))};
}

struct Accumulator {
    double sum = 0.0, sum_sq = 0.0;
    uint64_t count = 0;

    void add(double v) {
        sum += v;
        sum_sq += v * v;
        ++count;
    }
    void merge(const Accumulator& other) {
        sum += other.sum;
        sum_sq += other.sum_sq;
        count += other.count;
    }
    double mean() const { return count ? sum / static_cast<double>(count) : 0.0; }
    double standard_error() const {
        if (count < 2) return 0.0;
        const double n = static_cast<double>(count);
        const double var = std::max(0.0, (sum_sq - sum * sum / n) / (n - 1.0));
        return std::sqrt(var / n);
    }
};

}  // namespace

MapPropertyReport verify_map_properties(uint64_t n, double b1, double b2,
                                   uint32_t set_size, uint32_t overlap,
                                   uint64_t trials, uint64_t seed,
                                   size_t threads) {
    if (trials < 2) throw ParameterError("verify: need at least 2 trials");
    if (overlap > set_size)
        throw ParameterError("verify: overlap above set size");

    const ChosenPathParams base = params_for(n, b1, b2, seed);
    const auto [x, y] = overlap_pair(set_size, overlap);

    MapPropertyReport report;
    report.k = base.k;
    report.w = base.w;
    report.b1 = b1;
    report.set_size = set_size;
    report.overlap = overlap;
    report.similarity = static_cast<double>(overlap) / set_size;
    report.trials = trials;

    const auto bounds = expected_bounds(base, base.k, report.similarity);
    report.size_target = bounds.size_bound;
    report.shared_target = bounds.intersection_bound;
    report.collision_floor = bounds.collision_lower_bound;

    const size_t num_threads = threads == 0 ? default_threads() : threads;
    std::vector<Accumulator> size_acc(num_threads), shared_acc(num_threads),
        collide_acc(num_threads);

    SplitMix64 stream(seed);
    std::vector<uint64_t> trial_seeds(trials);
    for (auto& s : trial_seeds) s = stream.next();

    parallel_chunks(trials, num_threads, [&](size_t chunk, size_t begin, size_t end) {
        for (size_t trial = begin; trial < end; ++trial) {
            const ChosenPathMap map(params_for(n, b1, b2, trial_seeds[trial]));
            const PathSet mx = map.evaluate(x);
            const PathSet my = map.evaluate(y);
            const size_t shared = shared_fingerprints(mx, my);
            size_acc[chunk].add(static_cast<double>(mx.fingerprints.size()));
            shared_acc[chunk].add(static_cast<double>(shared));
            collide_acc[chunk].add(shared > 0 ? 1.0 : 0.0);
        }
    });

    Accumulator size_all, shared_all, collide_all;
    for (size_t c = 0; c < num_threads; ++c) {
        size_all.merge(size_acc[c]);
        shared_all.merge(shared_acc[c]);
        collide_all.merge(collide_acc[c]);
    }
    report.mean_size = size_all.mean();
    report.se_size = size_all.standard_error();
    report.mean_shared = shared_all.mean();
    report.se_shared = shared_all.standard_error();
    report.collision_freq = collide_all.mean();
    report.se_collision = collide_all.standard_error();
    return report;
}

PaddedHashReport verify_padded_hash(uint64_t n, double b1, double b2,
                                    uint32_t set_size, uint64_t trials,
                                    uint64_t seed, size_t threads) {
    if (trials < 2) throw ParameterError("verify: need at least 2 trials");

    const ChosenPathParams base = params_for(n, b1, b2, seed);
    const double m1 =
        std::pow(1.0 / b1, static_cast<double>(base.k)) * base.w;
    const double m2 =
        std::pow(b2 / b1, static_cast<double>(base.k)) * base.w;

    // Overlaps sitting exactly at the two thresholds where representable,
    // otherwise at the nearest attainable values on the correct side.
    uint32_t a_similar = static_cast<uint32_t>(std::ceil(b1 * set_size));
    while (static_cast<double>(a_similar) / set_size < b1) ++a_similar;
    uint32_t a_dissimilar = static_cast<uint32_t>(std::floor(b2 * set_size));
    while (a_dissimilar > 0 &&
           static_cast<double>(a_dissimilar) / set_size > b2)
        --a_dissimilar;

    const auto [x_sim, y_sim] = overlap_pair(set_size, a_similar);
    const auto [x_dis, y_dis] = overlap_pair(set_size, a_dissimilar);

    PaddedHashReport report;
    report.k = base.k;
    report.w = base.w;
    report.b1 = b1;
    report.b2 = b2;
    report.set_size = set_size;
    report.trials = trials;
    report.padded_size = static_cast<uint64_t>(std::ceil(8.0 * m1));
    report.p1_floor = 1.0 / (8.0 * static_cast<double>(report.padded_size));
    report.p2_ceiling = m2 / static_cast<double>(report.padded_size);

    const size_t num_threads = threads == 0 ? default_threads() : threads;
    std::vector<Accumulator> sim_acc(num_threads), dis_acc(num_threads);

    SplitMix64 stream(seed);
    std::vector<uint64_t> trial_seeds(2 * trials);
    for (auto& s : trial_seeds) s = stream.next();

    parallel_chunks(trials, num_threads, [&](size_t chunk, size_t begin, size_t end) {
        for (size_t trial = begin; trial < end; ++trial) {
            const ChosenPathMap map(
                params_for(n, b1, b2, trial_seeds[2 * trial]));
            const PaddedMapHash h(
                [&map](const SparseSet& s) {
                    return map.evaluate(s).fingerprints;
                },
                m1, trial_seeds[2 * trial + 1]);
            sim_acc[chunk].add(h(x_sim) == h(y_sim) ? 1.0 : 0.0);
            dis_acc[chunk].add(h(x_dis) == h(y_dis) ? 1.0 : 0.0);
        }
    });

    Accumulator sim_all, dis_all;
    for (size_t c = 0; c < num_threads; ++c) {
        sim_all.merge(sim_acc[c]);
        dis_all.merge(dis_acc[c]);
    }
    report.similar_freq = sim_all.mean();
    report.se_similar = sim_all.standard_error();
    report.dissimilar_freq = dis_all.mean();
    report.se_dissimilar = dis_all.standard_error();
    return report;
}

namespace {

DenseBits random_bits(Rng& rng, uint64_t dimension) {
    std::vector<uint8_t> bytes((dimension + 7) / 8);
    size_t i = 0;
    while (i + 8 <= bytes.size()) {
        const uint64_t word = rng.next_u64();
        for (int b = 0; b < 8; ++b)
            bytes[i + b] = static_cast<uint8_t>(word >> (8 * b));
        i += 8;
    }
    if (i < bytes.size()) {
        uint64_t word = rng.next_u64();
        for (; i < bytes.size(); ++i, word >>= 8)
            bytes[i] = static_cast<uint8_t>(word);
    }
    return DenseBits::from_bytes(std::move(bytes), dimension);
}

}  // namespace

TransformReport verify_transform(uint64_t source_dim, uint32_t out_dim,
                                 double b1, double epsilon, uint64_t hamming_r,
                                 uint64_t transform_trials,
                                 uint64_t cardinality_trials,
                                 uint64_t cardinality_dim, uint64_t seed,
                                 size_t threads) {
    const TransformParams base =
        TransformParams::derive(source_dim, out_dim, b1, epsilon, seed);
    const TransformParams small =
        TransformParams::derive(cardinality_dim, out_dim, b1, epsilon, seed);

    TransformReport report;
    report.source_dim = source_dim;
    report.blocks = base.blocks;
    report.width = base.width;
    report.samples = base.samples;
    report.epsilon = epsilon;
    report.hamming_distance = hamming_r;
    report.cardinality_dim = cardinality_dim;
    report.cardinality_trials = cardinality_trials;
    report.transform_trials = transform_trials;
    report.match_floor = b1 + epsilon / 4.0;
    report.match_analytic = std::pow(
        1.0 - static_cast<double>(hamming_r) / static_cast<double>(source_dim),
        static_cast<double>(base.samples));

    const size_t num_threads = threads == 0 ? default_threads() : threads;

    // Exact cardinality on random inputs, fresh transform per input.
    {
        std::vector<uint64_t> failures(num_threads, 0);
        SplitMix64 stream(seed ^ 0x7ca1d);
        std::vector<uint64_t> trial_seeds(cardinality_trials);
        for (auto& s : trial_seeds) s = stream.next();
        parallel_chunks(cardinality_trials, num_threads,
                        [&](size_t chunk, size_t begin, size_t end) {
                            for (size_t trial = begin; trial < end; ++trial) {
                                Rng rng(trial_seeds[trial]);
                                TransformParams p = small;
                                p.seed = rng.next_u64();
                                const TransformT transform(p);
                                const DenseBits x =
                                    random_bits(rng, cardinality_dim);
                                if (transform.apply(x).size() != small.blocks)
                                    ++failures[chunk];
                            }
                        });
        for (uint64_t f : failures) report.cardinality_failures += f;
    }

    // Block-match rate for pairs at exact Hamming distance r.
    {
        std::vector<Accumulator> match_acc(num_threads);
        SplitMix64 stream(seed ^ 0xb10c);
        std::vector<uint64_t> trial_seeds(transform_trials);
        for (auto& s : trial_seeds) s = stream.next();
        parallel_chunks(transform_trials, num_threads,
                        [&](size_t chunk, size_t begin, size_t end) {
                            for (size_t trial = begin; trial < end; ++trial) {
                                Rng rng(trial_seeds[trial]);
                                const DenseBits x = random_bits(rng, source_dim);
                                DenseBits y = x;
                                // Flip exactly r distinct coordinates.
                                std::vector<uint8_t> flipped(source_dim, 0);
                                uint64_t remaining = hamming_r;
                                while (remaining > 0) {
                                    const uint64_t c = rng.below(source_dim);
                                    if (flipped[c]) continue;
                                    flipped[c] = 1;
                                    y.set(c, !y.get(c));
                                    --remaining;
                                }
                                TransformParams p = base;
                                p.seed = rng.next_u64();
                                const TransformT transform(p);
                                const SparseSet tx = transform.apply(x);
                                const SparseSet ty = transform.apply(y);
                                const double matches = static_cast<double>(
                                    intersection_size(tx, ty));
                                match_acc[chunk].add(matches / base.blocks);
                            }
                        });
        Accumulator all;
        for (const auto& acc : match_acc) all.merge(acc);
        report.mean_match = all.mean();
        report.se_match = all.standard_error();
    }
    return report;
}

}  // namespace cpath
