#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace kmeans1d {

// Half-open index range [start, stop) into a sorted dataset.
struct IndexRange {
    std::size_t start = 0;
    std::size_t stop = 0;

    std::size_t size() const { return stop - start; }
    bool empty() const { return start == stop; }

    friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

// Values sorted ascending with weights permuted alongside them.
// Weights are all-ones when the caller supplied none.
struct SortedInput {
    std::vector<double> values;
    std::vector<double> weights;

    std::size_t size() const { return values.size(); }
    IndexRange full_range() const { return {0, values.size()}; }
};

// Cumulative arrays W, WX and WX^2 over a SortedInput.
// weight[j]          = sum of weights[0..j]
// weighted_value[j]  = sum of weights[i] * values[i]
// weighted_square[j] = sum of weights[i] * values[i]^2
struct PrefixSums {
    std::vector<double> weight;
    std::vector<double> weighted_value;
    std::vector<double> weighted_square;

    std::size_t size() const { return weight.size(); }
};

// Sorts values ascending and permutes weights with them (stable for equal
// values). Missing weights become all-ones.
//
// Throws std::invalid_argument on an empty dataset, non-finite values, or
// negative/non-finite weights.
SortedInput sort_and_align(std::span<const double> values,
                           std::span<const double> weights = {});

// sort_and_align plus the permutation needed to map original positions back
// into the sorted order: sorted_position[i] is where values[i] landed.
struct TrackedInput {
    SortedInput input;
    std::vector<std::size_t> sorted_position;
};

TrackedInput sort_and_align_tracked(std::span<const double> values,
                                    std::span<const double> weights = {});

// O(n) construction of the three cumulative arrays.
PrefixSums build_prefix_sums(const SortedInput& input);

// Sum of the underlying elements over [range.start, range.stop), i.e.
// cumulative[stop-1] - cumulative[start-1] with cumulative[-1] == 0.
// An empty range sums to 0. Throws std::out_of_range on a bad range.
inline double range_sum(std::span<const double> cumulative, IndexRange range) {
    if (range.start > range.stop || range.stop > cumulative.size()) {
        throw std::out_of_range("range_sum: range out of bounds");
    }
    if (range.start == range.stop) {
        return 0.0;
    }
    const double hi = cumulative[range.stop - 1];
    return range.start == 0 ? hi : hi - cumulative[range.start - 1];
}

} // namespace kmeans1d
