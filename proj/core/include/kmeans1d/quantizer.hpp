#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kmeans1d/core_types.hpp"
#include "kmeans1d/kcluster.hpp"

namespace kmeans1d {

enum class CodebookProvenance { kSeed, kUpscaled };

// A 2^bits-level scalar quantization codebook over one sorted channel.
struct Codebook {
    std::size_t bits = 0;
    std::vector<double> centroids;      // 2^bits, sorted
    std::vector<std::size_t> borders;   // 2^bits + 1, spanning the channel
    double wcss = 0.0;
    CodebookProvenance provenance = CodebookProvenance::kSeed;

    std::size_t levels() const { return centroids.size(); }
};

// Seed codebook: kmeans_1d with k = 2^bits over the whole channel.
// Throws std::invalid_argument when 2^bits exceeds the channel length.
Codebook seed_codebook(const SortedInput& input, const PrefixSums& prefix,
                       std::size_t bits, const KMeansConfig& config);

// Doubles the level count by running the two-cluster solver on every parent
// cluster, reusing the channel's original prefix sums. Child clusters nest
// inside their parents and the total WCSS never increases. An empty parent
// cluster contributes two empty children that duplicate its centroid.
Codebook upscale(const Codebook& parent, const SortedInput& input,
                 const PrefixSums& prefix);

// Assigns each original (unsorted) value the index of its codebook cluster via
// the sorting permutation; decoding code -> centroid quantizes the value.
std::vector<std::uint32_t> assign_codes(std::span<const double> original_values,
                                        const Codebook& codebook,
                                        std::span<const std::size_t> sorted_position);

} // namespace kmeans1d
