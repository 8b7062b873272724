#pragma once

#include <optional>
#include <string>

#include "cpath/sparse_set.hpp"

namespace cpath {

enum class MeasureKind { BraunBlanquet, Jaccard, Cosine, NormalizedHamming };

const char* to_string(MeasureKind kind);
std::optional<MeasureKind> measure_from_string(const std::string& name);

/// |x ∩ y| / max(|x|, |y|). Undefined when both sets are empty.
double braun_blanquet(const SparseSet& x, const SparseSet& y);

/// |x ∩ y| / |x ∪ y|. Undefined when both sets are empty.
double jaccard(const SparseSet& x, const SparseSet& y);

/// |x ∩ y| / sqrt(|x| |y|). Undefined when either set is empty.
double cosine(const SparseSet& x, const SparseSet& y);

/// Similarity score under the given measure. NormalizedHamming scores
/// 2|x∩y| / (|x|+|y|), i.e. one minus the Hamming distance normalized by
/// |x|+|y| (the 2t normalization when both sets have size t), so that larger
/// is always more similar.
double similarity(MeasureKind kind, const SparseSet& x, const SparseSet& y);

/// Largest value the measure can attain when |y| = beta * |x|.
double attainable_max(MeasureKind kind, double beta);

/// Converts a threshold between measures through the common parametrization
/// b = |x∩y|/|x| with |y| = beta |x|:
///   BraunBlanquet      value = b
///   Jaccard            value = b / (1 + beta - b)
///   Cosine             value = b / sqrt(beta)
///   NormalizedHamming  value = 1 - b   (distance; beta = 1 only)
/// Composition through b is exact; round-trips are stable to 1e-12.
double convert_threshold(double value, MeasureKind from, MeasureKind to,
                         double beta = 1.0);

/// A (s1, s2) threshold pair under one measure parametrization.
/// For NormalizedHamming the values are normalized distances and the ordering
/// invariant applies to the corresponding similarities 1 - r.
struct ThresholdPair {
    double s1 = 0.0;
    double s2 = 0.0;
    MeasureKind measure = MeasureKind::BraunBlanquet;
    double beta = 1.0;
};

/// Validates ranges, ordering and the attainable maximum for the given beta.
ThresholdPair make_threshold_pair(double s1, double s2, MeasureKind measure,
                                  double beta = 1.0);

}  // namespace cpath
