#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "cpath/errors.hpp"

namespace cpath {

/// A point of {0,1}^d in its set view: the strictly increasing sequence of
/// dimension indices where the vector is 1. The universe size d is implicit;
/// no operation ever touches absent dimensions.
class SparseSet {
  public:
    SparseSet() = default;

    SparseSet(std::initializer_list<uint32_t> dims)
        : SparseSet(from_unsorted(std::vector<uint32_t>(dims))) {}

    /// Adopts an already strictly increasing sequence.
    static SparseSet from_sorted(std::vector<uint32_t> dims) {
        for (size_t i = 1; i < dims.size(); ++i)
            if (dims[i] <= dims[i - 1])
                throw ParameterError("SparseSet: dims must be strictly increasing");
        SparseSet s;
        s.dims_ = std::move(dims);
        return s;
    }

    /// Sorts and removes duplicates.
    static SparseSet from_unsorted(std::vector<uint32_t> dims) {
        std::sort(dims.begin(), dims.end());
        dims.erase(std::unique(dims.begin(), dims.end()), dims.end());
        SparseSet s;
        s.dims_ = std::move(dims);
        return s;
    }

    const std::vector<uint32_t>& dims() const { return dims_; }
    size_t size() const { return dims_.size(); }
    bool empty() const { return dims_.empty(); }

    auto begin() const { return dims_.begin(); }
    auto end() const { return dims_.end(); }

    bool contains(uint32_t dim) const {
        return std::binary_search(dims_.begin(), dims_.end(), dim);
    }

    friend bool operator==(const SparseSet&, const SparseSet&) = default;

  private:
    std::vector<uint32_t> dims_;
};

/// |x ∩ y| by a merge walk over the sorted sequences.
inline size_t intersection_size(const SparseSet& x, const SparseSet& y) {
    const auto& a = x.dims();
    const auto& b = y.dims();
    size_t i = 0, j = 0, common = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            ++common;
            ++i;
            ++j;
        } else if (a[i] < b[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return common;
}

}  // namespace cpath
