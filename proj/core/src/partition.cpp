#include "kmeans1d/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace kmeans1d {

std::vector<std::size_t> centroids_to_borders(const SortedInput& input,
                                              std::span<const double> sorted_centroids,
                                              IndexRange range) {
    if (!std::is_sorted(sorted_centroids.begin(), sorted_centroids.end())) {
        throw std::invalid_argument("unsorted centroids");
    }
    if (range.start > range.stop || range.stop > input.size()) {
        throw std::out_of_range("centroids_to_borders: range out of bounds");
    }

    const std::size_t k = sorted_centroids.size();
    std::vector<std::size_t> borders(k + 1);
    borders[0] = range.start;
    borders[k] = range.stop;

    const double* lo = input.values.data() + range.start;
    const double* hi = input.values.data() + range.stop;
    for (std::size_t i = 1; i < k; ++i) {
        const double midpoint = (sorted_centroids[i - 1] + sorted_centroids[i]) / 2.0;
        // First value >= midpoint: a point exactly on the midpoint goes right.
        borders[i] = static_cast<std::size_t>(
            std::lower_bound(lo, hi, midpoint) - input.values.data());
    }
    return borders;
}

double range_centroid(const PrefixSums& prefix, const SortedInput& input,
                      IndexRange range) {
    if (range.empty()) {
        throw std::invalid_argument("range_centroid: empty range");
    }
    const double weight_sum = range_sum(prefix.weight, range);
    if (weight_sum == 0.0) {
        // All weights in the range are zero: fall back to the unweighted mean.
        double acc = 0.0;
        for (std::size_t i = range.start; i < range.stop; ++i) {
            acc += input.values[i];
        }
        return acc / static_cast<double>(range.size());
    }
    return range_sum(prefix.weighted_value, range) / weight_sum;
}

double range_wcss(const PrefixSums& prefix, double centroid, IndexRange range) {
    if (range.empty()) {
        return 0.0;
    }
    const double q0 = range_sum(prefix.weight, range);
    const double q1 = range_sum(prefix.weighted_value, range);
    const double q2 = range_sum(prefix.weighted_square, range);
    return q2 - 2.0 * centroid * q1 + centroid * centroid * q0;
}

double total_wcss(const PrefixSums& prefix, std::span<const double> centroids,
                  std::span<const std::size_t> borders) {
    if (borders.size() != centroids.size() + 1) {
        throw std::invalid_argument("total_wcss: borders/centroids mismatch");
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < centroids.size(); ++i) {
        const IndexRange cluster{borders[i], borders[i + 1]};
        if (cluster.empty()) {
            continue;
        }
        acc += range_wcss(prefix, centroids[i], cluster);
    }
    return acc;
}

} // namespace kmeans1d
