#include "kmeans1d/quantizer.hpp"

#include <algorithm>
#include <stdexcept>

#include "kmeans1d/two_cluster.hpp"

namespace kmeans1d {

Codebook seed_codebook(const SortedInput& input, const PrefixSums& prefix,
                       std::size_t bits, const KMeansConfig& config) {
    if (bits >= 63) {
        throw std::invalid_argument("seed_codebook: bits too large");
    }
    const std::size_t levels = std::size_t{1} << bits;
    if (levels > input.size()) {
        throw std::invalid_argument("seed_codebook: 2^bits exceeds channel length");
    }
    KMeansConfig cfg = config;
    cfg.k = levels;
    const ClusteringRun run = kmeans_1d(input, prefix, cfg, input.full_range());

    Codebook book;
    book.bits = bits;
    book.centroids = run.clustering.centroids;
    book.borders = run.clustering.borders;
    book.wcss = run.clustering.wcss;
    book.provenance = CodebookProvenance::kSeed;
    return book;
}

Codebook upscale(const Codebook& parent, const SortedInput& input,
                 const PrefixSums& prefix) {
    Codebook child;
    child.bits = parent.bits + 1;
    child.provenance = CodebookProvenance::kUpscaled;
    child.centroids.reserve(2 * parent.levels());
    child.borders.reserve(2 * parent.levels() + 1);
    child.borders.push_back(parent.borders.front());

    double wcss = 0.0;
    for (std::size_t i = 0; i < parent.levels(); ++i) {
        const IndexRange cluster{parent.borders[i], parent.borders[i + 1]};
        if (cluster.empty()) {
            // Nothing to subdivide; both children inherit the parent centroid.
            child.centroids.push_back(parent.centroids[i]);
            child.centroids.push_back(parent.centroids[i]);
            child.borders.push_back(cluster.start);
            child.borders.push_back(cluster.stop);
            continue;
        }
        const TwoSplit split = two_cluster_split(input, prefix, cluster);
        child.centroids.push_back(split.left_centroid);
        child.centroids.push_back(split.right_centroid);
        child.borders.push_back(split.division);
        child.borders.push_back(cluster.stop);
        wcss += split.wcss;
    }
    child.wcss = wcss;
    return child;
}

std::vector<std::uint32_t> assign_codes(std::span<const double> original_values,
                                        const Codebook& codebook,
                                        std::span<const std::size_t> sorted_position) {
    if (original_values.size() != sorted_position.size()) {
        throw std::invalid_argument("assign_codes: permutation length mismatch");
    }
    std::vector<std::uint32_t> codes(original_values.size());
    for (std::size_t i = 0; i < original_values.size(); ++i) {
        const std::size_t pos = sorted_position[i];
        // Cluster c owns sorted positions [borders[c], borders[c+1]); empty
        // clusters are skipped by the upper bound.
        const auto it = std::upper_bound(codebook.borders.begin(),
                                         codebook.borders.end(), pos);
        codes[i] = static_cast<std::uint32_t>(it - codebook.borders.begin() - 1);
    }
    return codes;
}

} // namespace kmeans1d
