#include "cpath/chosen_path.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace cpath {

std::vector<uint64_t> derive_level_seeds(uint64_t master_seed, uint32_t k) {
    std::vector<uint64_t> seeds(k);
    for (uint32_t i = 0; i < k; ++i)
        seeds[i] = master_seed ^ static_cast<uint64_t>(i + 1);
    return seeds;
}

ChosenPathParams params_for(uint64_t n, double b1, double b2, uint64_t master_seed) {
    if (!(0.0 < b2 && b2 < b1 && b1 < 1.0))
        throw ParameterError("params_for: need 0 < b2 < b1 < 1");
    if (n < 1) throw ParameterError("params_for: need n >= 1");

    const double raw = std::log(static_cast<double>(n)) / std::log(1.0 / b2);
    uint32_t k = static_cast<uint32_t>(std::max(1.0, std::ceil(raw)));

    ChosenPathParams params;
    params.b1 = b1;
    params.k = k;
    params.w = 2 * k;
    params.master_seed = master_seed;
    params.level_seeds = derive_level_seeds(master_seed, k);
    return params;
}

ChosenPathMap::ChosenPathMap(ChosenPathParams params, EvalLimits limits)
    : params_(std::move(params)), limits_(limits) {
    if (params_.k < 1 || params_.w < 1)
        throw ParameterError("ChosenPathMap: need k >= 1 and w >= 1");
    if (!(params_.b1 > 0.0) || !(params_.b1 < 1.0))
        throw ParameterError("ChosenPathMap: need b1 in (0,1)");
    if (params_.level_seeds.size() != params_.k)
        throw ParameterError("ChosenPathMap: need one seed per level");
    levels_.reserve(params_.k);
    for (uint32_t i = 0; i < params_.k; ++i) {
        const uint64_t seed = params_.level_seeds[i];
        levels_.push_back(Level{TabulationHash(seed), TabulationHash(seed ^ kExtendSalt)});
    }
}

PathSet ChosenPathMap::evaluate(const SparseSet& x) const {
    PathSet result;
    result.depth = params_.k;
    std::vector<uint64_t> frontier = evaluate_raw(x);
    std::sort(frontier.begin(), frontier.end());
    frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());
    result.fingerprints = std::move(frontier);
    return result;
}

std::vector<uint64_t> ChosenPathMap::evaluate_raw(const SparseSet& x) const {
    if (x.empty()) return {};

    const double tau =
        std::min(1.0, 1.0 / (params_.b1 * static_cast<double>(x.size())));
    // Survival test as an integer comparison on the top 53 hash bits;
    // (h >> 11) < tau_bits is exactly to_unit(h) < tau since tau * 2^53 is an
    // exponent shift of a double in (0, 1].
    const uint64_t tau_bits = static_cast<uint64_t>(std::ceil(tau * 0x1.0p53));

    const auto& dims = x.dims();
    std::vector<uint64_t> frontier(params_.w);
    for (uint32_t s = 0; s < params_.w; ++s) frontier[s] = s;

    std::vector<uint64_t> survive_part(dims.size());
    std::vector<uint64_t> extend_part(dims.size());
    std::vector<uint64_t> next;

    for (uint32_t level = 0; level < params_.k; ++level) {
        const Level& h = levels_[level];
        for (size_t v = 0; v < dims.size(); ++v) {
            survive_part[v] = h.survive.suffix(dims[v]);
            extend_part[v] = h.extend.suffix(dims[v]);
        }
        next.clear();
        for (uint64_t path : frontier) {
            const uint64_t survive_prefix = h.survive.prefix(path);
            const uint64_t extend_prefix = h.extend.prefix(path);
            for (size_t v = 0; v < dims.size(); ++v) {
                if (((survive_prefix ^ survive_part[v]) >> 11) < tau_bits)
                    next.push_back(extend_prefix ^ extend_part[v]);
            }
            if (next.size() > limits_.max_frontier)
                throw BlowupError("chosen path frontier exceeded " +
                                  std::to_string(limits_.max_frontier) +
                                  " paths at level " + std::to_string(level + 1));
        }
        frontier.swap(next);
        if (frontier.empty()) break;
    }
    return frontier;
}

PathSet evaluate_map(const ChosenPathParams& params, const SparseSet& x,
                     EvalLimits limits) {
    return ChosenPathMap(params, limits).evaluate(x);
}

ExpectedBounds expected_bounds(const ChosenPathParams& params, uint32_t level,
                               double similarity) {
    if (level > params.k)
        throw ParameterError("expected_bounds: level must be in 0..k");
    const double i = static_cast<double>(level);
    ExpectedBounds b;
    b.size_bound = std::pow(1.0 / params.b1, i) * params.w;
    b.intersection_bound = std::pow(similarity / params.b1, i) * params.w;
    b.collision_lower_bound =
        static_cast<double>(params.w) / (i + static_cast<double>(params.w));
    return b;
}

size_t shared_fingerprints(const PathSet& a, const PathSet& b) {
    size_t i = 0, j = 0, common = 0;
    while (i < a.fingerprints.size() && j < b.fingerprints.size()) {
        if (a.fingerprints[i] == b.fingerprints[j]) {
            ++common;
            ++i;
            ++j;
        } else if (a.fingerprints[i] < b.fingerprints[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return common;
}

}  // namespace cpath
