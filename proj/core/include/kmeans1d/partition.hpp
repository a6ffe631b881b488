#pragma once

#include <span>
#include <vector>

#include "kmeans1d/core_types.hpp"

namespace kmeans1d {

// A k-way contiguous partition of a sorted range.
// Cluster i owns values[borders[i] .. borders[i+1]); borders has k+1 entries
// with borders[0] == range.start and borders[k] == range.stop.
struct Clustering {
    std::vector<double> centroids;      // sorted ascending
    std::vector<std::size_t> borders;   // non-decreasing, length k+1
    double wcss = 0.0;

    std::size_t k() const { return centroids.size(); }
};

// Converts sorted centroids into cluster borders over [range.start, range.stop).
// Interior border i is the smallest index j with
// values[j] >= (centroids[i-1] + centroids[i]) / 2, so a point sitting exactly
// on a midpoint joins the right cluster. O(k log n).
//
// Throws std::invalid_argument if the centroids are not sorted.
std::vector<std::size_t> centroids_to_borders(const SortedInput& input,
                                              std::span<const double> sorted_centroids,
                                              IndexRange range);

// Weighted mean of a non-empty range. A range whose weights sum to zero falls
// back to the unweighted mean of its values.
double range_centroid(const PrefixSums& prefix, const SortedInput& input,
                      IndexRange range);

// Weighted sum of squared deviations from `centroid` over the range, via three
// O(1) cumulative-array queries. Empty ranges contribute 0.
double range_wcss(const PrefixSums& prefix, double centroid, IndexRange range);

// Sum of range_wcss over all clusters described by (centroids, borders).
double total_wcss(const PrefixSums& prefix, std::span<const double> centroids,
                  std::span<const std::size_t> borders);

} // namespace kmeans1d
