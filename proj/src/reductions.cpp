#include "cpath/reductions.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "cpath/mix.hpp"

namespace cpath {

// ---------------------------------------------------------------------------
// PaddedMapHash
// ---------------------------------------------------------------------------

PaddedMapHash::PaddedMapHash(MapEval map_eval, double m1_bound, uint64_t order_seed)
    : eval_(std::move(map_eval)),
      m_(static_cast<uint64_t>(std::ceil(8.0 * m1_bound))),
      order_(order_seed) {
    if (!(m1_bound > 0.0)) throw ParameterError("PaddedMapHash: need m1 > 0");
}

uint64_t PaddedMapHash::operator()(const SparseSet& x) const {
    std::vector<uint64_t> elements = eval_(x);
    uint64_t point_fp = 0;
    {
        std::vector<uint8_t> bytes;
        bytes.reserve(x.size() * 4);
        for (uint32_t dim : x.dims())
            for (int b = 0; b < 4; ++b)
                bytes.push_back(static_cast<uint8_t>(dim >> (8 * b)));
        point_fp = tabulation_fold(kPointFingerprintSeed, bytes.data(), bytes.size());
    }

    if (elements.size() >= m_) elements.clear();
    const uint64_t sentinels = m_ - elements.size();

    uint64_t best_order = std::numeric_limits<uint64_t>::max();
    uint64_t best_element = std::numeric_limits<uint64_t>::max();
    auto consider = [&](uint64_t element) {
        uint8_t bytes[8];
        for (int b = 0; b < 8; ++b) bytes[b] = static_cast<uint8_t>(element >> (8 * b));
        const uint64_t order = order_.hash_bytes(bytes);
        if (order < best_order || (order == best_order && element < best_element)) {
            best_order = order;
            best_element = element;
        }
    };
    for (uint64_t element : elements) consider(element);
    for (uint64_t c = 1; c <= sentinels; ++c)
        consider(mix64(point_fp + c * kSplitMixGamma));
    return best_element;
}

// ---------------------------------------------------------------------------
// Transform T
// ---------------------------------------------------------------------------

TransformParams TransformParams::derive(uint64_t source_dim, uint32_t out_dim,
                                        double b1, double epsilon, uint64_t seed) {
    if (source_dim < 1) throw ParameterError("transform: need source dimension >= 1");
    if (!(epsilon > 0.0) || !(b1 > 0.0) || b1 + epsilon >= 1.0)
        throw ParameterError("transform: need 0 < b1, 0 < eps, b1 + eps < 1");

    TransformParams p;
    p.source_dim = source_dim;
    p.epsilon = epsilon;
    p.seed = seed;
    p.samples = static_cast<uint32_t>(std::max(
        1.0, std::floor(std::sqrt(static_cast<double>(source_dim)) *
                        std::log(1.0 / (b1 + epsilon)))));
    p.width = static_cast<uint32_t>(std::ceil(8.0 / epsilon));
    p.blocks = out_dim / p.width;
    if (p.blocks < 1)
        throw ParameterError("transform: output dimension below one block");
    return p;
}

TransformT::TransformT(TransformParams params) : params_(params) {
    if (params_.blocks < 1 || params_.width < 1 || params_.samples < 1)
        throw ParameterError("transform: blocks, width and samples must be positive");
    if (params_.source_dim > std::numeric_limits<uint32_t>::max())
        throw ParameterError("transform: source dimension above 32-bit range");

    Rng rng(params_.seed);
    sample_indices_.resize(static_cast<size_t>(params_.blocks) * params_.samples);
    for (auto& index : sample_indices_)
        index = static_cast<uint32_t>(rng.below(params_.source_dim));
    block_seeds_.resize(params_.blocks);
    for (auto& seed : block_seeds_) seed = rng.next_u64();
}

SparseSet TransformT::apply(const DenseBits& x) const {
    if (x.dimension() != params_.source_dim)
        throw ParameterError("transform: input has dimension " +
                             std::to_string(x.dimension()) + ", expected " +
                             std::to_string(params_.source_dim));

    std::vector<uint32_t> dims;
    dims.reserve(params_.blocks);
    std::vector<uint8_t> packed((params_.samples + 7) / 8);
    for (uint32_t b = 0; b < params_.blocks; ++b) {
        std::fill(packed.begin(), packed.end(), 0);
        const uint32_t* indices =
            sample_indices_.data() + static_cast<size_t>(b) * params_.samples;
        for (uint32_t s = 0; s < params_.samples; ++s) {
            if (x.get(indices[s]))
                packed[s / 8] |= static_cast<uint8_t>(1u << (7 - s % 8));
        }
        const uint64_t g = tabulation_fold(block_seeds_[b], packed.data(), packed.size());
        const uint32_t position = static_cast<uint32_t>(
            (static_cast<unsigned __int128>(g) * params_.width) >> 64);
        dims.push_back(b * params_.width + position);
    }
    return SparseSet::from_sorted(std::move(dims));
}

// ---------------------------------------------------------------------------
// Size classes
// ---------------------------------------------------------------------------

std::map<uint32_t, std::vector<uint32_t>> split_by_size(
    std::span<const SparseSet> points) {
    std::map<uint32_t, std::vector<uint32_t>> classes;
    for (uint32_t id = 0; id < points.size(); ++id) {
        const size_t size = points[id].size();
        if (size == 0)
            throw ParameterError("split_by_size: point " + std::to_string(id) +
                                 " is empty");
        const uint32_t klass = static_cast<uint32_t>(std::bit_width(size) - 1);
        classes[klass].push_back(id);
    }
    return classes;
}

// ---------------------------------------------------------------------------
// Threshold translation
// ---------------------------------------------------------------------------

IntersectionThresholds threshold_translate(
    const std::function<double(uint32_t)>& f, uint32_t i_max, double s1,
    double s2) {
    if (!(s2 < s1)) throw ParameterError("threshold_translate: need s2 < s1");
    if (f(i_max) < s1)
        throw InfeasibleError("threshold_translate: s1 unattainable");

    IntersectionThresholds result;
    uint32_t i = 0;
    while (f(i) < s1) ++i;
    result.i1 = i;
    i = 0;
    while (f(i) <= s2) ++i;
    result.i2 = i;
    return result;
}

// ---------------------------------------------------------------------------
// Dimension reduction
// ---------------------------------------------------------------------------

DimensionReducer::DimensionReducer(uint32_t input_dim, uint32_t output_dim,
                                   uint32_t size_class, double n, uint64_t seed)
    : input_dim_(input_dim) {
    if (output_dim < 1) throw ParameterError("dimension_reduce: need d' >= 1");
    if (input_dim < 1) throw ParameterError("dimension_reduce: need d >= 1");
    if (!(n > 1.0)) throw ParameterError("dimension_reduce: need n > 1");

    const double class_top = std::pow(2.0, static_cast<double>(size_class) + 1.0);
    const double raw = static_cast<double>(input_dim) / (class_top * std::log(n));
    group_size_ = static_cast<uint32_t>(std::max(1.0, std::ceil(raw)));
    group_size_ = std::min<uint32_t>(group_size_, input_dim);

    groups_.resize(output_dim);
    for (uint32_t j = 0; j < output_dim; ++j) {
        Rng rng(mix64(seed ^ (static_cast<uint64_t>(j) + 1)));
        auto& group = groups_[j];
        group.reserve(group_size_);
        while (group.size() < group_size_) {
            const uint32_t candidate = static_cast<uint32_t>(rng.below(input_dim));
            if (std::find(group.begin(), group.end(), candidate) == group.end())
                group.push_back(candidate);
        }
        std::sort(group.begin(), group.end());
    }
}

SparseSet DimensionReducer::apply(const SparseSet& x) const {
    std::vector<uint32_t> dims;
    for (uint32_t j = 0; j < groups_.size(); ++j) {
        for (uint32_t coordinate : groups_[j]) {
            if (x.contains(coordinate)) {
                dims.push_back(j);
                break;
            }
        }
    }
    return SparseSet::from_sorted(std::move(dims));
}

std::vector<SparseSet> dimension_reduce(std::span<const SparseSet> class_points,
                                        uint32_t input_dim, uint32_t output_dim,
                                        uint32_t size_class, double n,
                                        uint64_t seed) {
    const DimensionReducer reducer(input_dim, output_dim, size_class, n, seed);
    std::vector<SparseSet> reduced;
    reduced.reserve(class_points.size());
    for (const auto& point : class_points) reduced.push_back(reducer.apply(point));
    return reduced;
}

}  // namespace cpath
