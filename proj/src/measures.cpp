#include "cpath/measures.hpp"

#include <cmath>

namespace cpath {

const char* to_string(MeasureKind kind) {
    switch (kind) {
        case MeasureKind::BraunBlanquet: return "braunblanquet";
        case MeasureKind::Jaccard: return "jaccard";
        case MeasureKind::Cosine: return "cosine";
        case MeasureKind::NormalizedHamming: return "hamming";
    }
    return "?";
}

std::optional<MeasureKind> measure_from_string(const std::string& name) {
    if (name == "braunblanquet" || name == "bb") return MeasureKind::BraunBlanquet;
    if (name == "jaccard") return MeasureKind::Jaccard;
    if (name == "cosine") return MeasureKind::Cosine;
    if (name == "hamming" || name == "normalizedhamming")
        return MeasureKind::NormalizedHamming;
    return std::nullopt;
}

double braun_blanquet(const SparseSet& x, const SparseSet& y) {
    if (x.empty() && y.empty())
        throw UndefinedSimilarityError("braun_blanquet: both sets empty");
    const double common = static_cast<double>(intersection_size(x, y));
    return common / static_cast<double>(std::max(x.size(), y.size()));
}

double jaccard(const SparseSet& x, const SparseSet& y) {
    if (x.empty() && y.empty())
        throw UndefinedSimilarityError("jaccard: both sets empty");
    const size_t common = intersection_size(x, y);
    return static_cast<double>(common) /
           static_cast<double>(x.size() + y.size() - common);
}

double cosine(const SparseSet& x, const SparseSet& y) {
    if (x.empty() || y.empty())
        throw UndefinedSimilarityError("cosine: empty set");
    const double common = static_cast<double>(intersection_size(x, y));
    return common / std::sqrt(static_cast<double>(x.size()) *
                              static_cast<double>(y.size()));
}

double similarity(MeasureKind kind, const SparseSet& x, const SparseSet& y) {
    switch (kind) {
        case MeasureKind::BraunBlanquet: return braun_blanquet(x, y);
        case MeasureKind::Jaccard: return jaccard(x, y);
        case MeasureKind::Cosine: return cosine(x, y);
        case MeasureKind::NormalizedHamming: {
            if (x.empty() && y.empty())
                throw UndefinedSimilarityError("hamming similarity: both sets empty");
            const double common = static_cast<double>(intersection_size(x, y));
            return 2.0 * common / static_cast<double>(x.size() + y.size());
        }
    }
    throw ParameterError("similarity: unknown measure");
}

double attainable_max(MeasureKind kind, double beta) {
    switch (kind) {
        case MeasureKind::BraunBlanquet: return beta;
        case MeasureKind::Jaccard: return beta;
        case MeasureKind::Cosine: return std::sqrt(beta);
        case MeasureKind::NormalizedHamming: return 1.0;
    }
    throw ParameterError("attainable_max: unknown measure");
}

namespace {

// Relative slack for range checks so that values produced by a prior
// conversion (exact up to rounding) are not rejected at the boundary.
constexpr double kRangeSlack = 1e-9;

void check_beta(double beta) {
    if (!(beta > 0.0) || beta > 1.0)
        throw ParameterError("convert_threshold: beta must be in (0,1]");
}

double checked(double value, double max_value, const char* what) {
    if (!(value >= 0.0) || value > max_value * (1.0 + kRangeSlack))
        throw RangeError(std::string(what) + ": value outside attainable range");
    return std::min(value, max_value);
}

}  // namespace

double convert_threshold(double value, MeasureKind from, MeasureKind to,
                         double beta) {
    check_beta(beta);
    if ((from == MeasureKind::NormalizedHamming ||
         to == MeasureKind::NormalizedHamming) &&
        beta != 1.0)
        throw UnsupportedParametrizationError(
            "convert_threshold: NormalizedHamming requires beta = 1");

    // The conversion is the algebra through b = |x∩y|/|x| with b in [0,1];
    // the accepted range per measure is the image of that interval, so
    // chained conversions and round-trips are closed. The tighter b <= beta
    // attainability cap for concrete set pairs is enforced where threshold
    // pairs are validated, not here.
    double b = 0.0;
    switch (from) {
        case MeasureKind::BraunBlanquet:
            b = checked(value, 1.0, "braunblanquet");
            break;
        case MeasureKind::Jaccard: {
            const double j = checked(value, 1.0 / beta, "jaccard");
            b = j * (1.0 + beta) / (1.0 + j);
            break;
        }
        case MeasureKind::Cosine: {
            const double c = checked(value, 1.0 / std::sqrt(beta), "cosine");
            b = c * std::sqrt(beta);
            break;
        }
        case MeasureKind::NormalizedHamming: {
            const double r = checked(value, 1.0, "hamming");
            b = 1.0 - r;
            break;
        }
    }
    b = std::min(b, 1.0);

    // Outward leg: b -> measure value.
    switch (to) {
        case MeasureKind::BraunBlanquet: return b;
        case MeasureKind::Jaccard: return b / (1.0 + beta - b);
        case MeasureKind::Cosine: return b / std::sqrt(beta);
        case MeasureKind::NormalizedHamming: return 1.0 - b;
    }
    throw ParameterError("convert_threshold: unknown measure");
}

ThresholdPair make_threshold_pair(double s1, double s2, MeasureKind measure,
                                  double beta) {
    check_beta(beta);
    if (measure == MeasureKind::NormalizedHamming) {
        if (beta != 1.0)
            throw UnsupportedParametrizationError(
                "threshold pair: NormalizedHamming requires beta = 1");
        // Stored as distances; similarity ordering means r1 < r2.
        if (!(s1 >= 0.0) || !(s1 < 1.0) || !(s2 > 0.0) || s2 > 1.0 || !(s1 < s2))
            throw ParameterError("threshold pair: need 0 <= r1 < r2 <= 1");
        return ThresholdPair{s1, s2, measure, beta};
    }
    if (!(s1 > 0.0) || s1 > 1.0 || !(s2 >= 0.0) || !(s2 < 1.0))
        throw ParameterError("threshold pair: s1 in (0,1], s2 in [0,1)");
    if (!(s2 < s1)) throw ParameterError("threshold pair: s2 must be below s1");
    if (s1 > attainable_max(measure, beta) * (1.0 + 1e-9))
        throw ParameterError("threshold pair: s1 above attainable maximum for beta");
    return ThresholdPair{s1, s2, measure, beta};
}

}  // namespace cpath
