#pragma once

#include <stdexcept>
#include <string>

namespace cpath {

/// Invalid parameter values (threshold ordering, empty inputs, bad sizes).
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Similarity requested for a pair on which the measure is undefined
/// (for example both sets empty).
struct UndefinedSimilarityError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Value outside the attainable range of a measure parametrization.
struct RangeError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

/// Measure/parametrization combination that has no defined conversion.
struct UnsupportedParametrizationError : ParameterError {
    using ParameterError::ParameterError;
};

/// Malformed input data (set files, snapshots, hex rows).
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Branching-process frontier exceeded its configured cap.
struct BlowupError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Requested threshold cannot be met by any intersection size.
struct InfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace cpath
