#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "kmeans1d/core_types.hpp"
#include "kmeans1d/partition.hpp"

namespace kmeans1d {

// Every knob of the k-cluster pipeline. local_trials == 0 selects the default
// of 2 + floor(ln k) candidates per greedy round.
struct KMeansConfig {
    std::size_t k = 1;
    std::size_t max_iter = 300;
    std::size_t local_trials = 0;
    std::uint64_t seed = 0;

    std::size_t resolved_local_trials() const;
};

// Source of uniform draws in [0, 1). The draw order is part of the public
// contract: kmeans_1d consumes one draw for the first centroid, then exactly
// local_trials draws per greedy round, drawn as one batch before any search.
class UniformSource {
public:
    virtual ~UniformSource() = default;
    virtual double next_uniform() = 0;
};

// Deterministic generator; identical seeds yield identical draw sequences
// within this implementation (mt19937_64 with 53-bit mantissa conversion).
class RandomSource final : public UniformSource {
public:
    explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

    double next_uniform() override {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

private:
    std::mt19937_64 engine_;
};

// Weighted inverse-CDF draw of one data point: picks values[j] for the
// smallest j with cumulative weight >= u * (total weight over range).
// O(log n); consumes exactly one uniform.
//
// Throws std::invalid_argument("degenerate weights") when the range carries
// zero total weight.
double sample_first_centroid(const SortedInput& input, const PrefixSums& prefix,
                             IndexRange range, UniformSource& rng);

// S[upto]: the WCSS of the clustering restricted to indices below `upto`,
// i.e. the cumulative weighted squared distance to the nearest centroid.
// Computed in O(k) by truncating per-cluster range queries; the full array S
// is never materialized.
double cumulative_inertia(std::span<const double> sorted_centroids,
                          std::span<const std::size_t> borders,
                          const PrefixSums& prefix, std::size_t upto);

struct CandidateSample {
    std::vector<double> values;
    bool degenerate = false;   // total inertia was zero; all candidates equal values[range.start]
};

// Draws `count` candidate centroids with probability proportional to the
// weighted squared distance to the nearest current centroid, by binary search
// on the implicit cumulative inertia. Consumes exactly `count` uniforms,
// drawn as one batch before any search. O(count * k * log n).
CandidateSample sample_candidates(const SortedInput& input, const PrefixSums& prefix,
                                  std::span<const double> current_centroids,
                                  std::size_t count, IndexRange range,
                                  UniformSource& rng);

// Greedy k-means++ seeding: first centroid by weighted sampling, then k-1
// rounds that draw local_trials candidates each and keep the candidate whose
// insertion minimizes total WCSS (ties go to the first candidate evaluated).
// Returns the centroids in selection order. O(l * k^2 * log n).
std::vector<double> greedy_kmeanspp(const SortedInput& input, const PrefixSums& prefix,
                                    const KMeansConfig& config, IndexRange range,
                                    UniformSource& rng);

struct ClusteringRun {
    Clustering clustering;
    std::size_t iterations = 0;
    bool converged = false;
};

// Lloyd iterations over sorted data: borders by midpoint binary search,
// centroids by O(1) range queries. Stops when the borders repeat exactly
// between consecutive iterations or max_iter is reached. An empty cluster
// keeps its centroid; a zero-weight cluster takes its unweighted mean.
// O(i * k * log n) plus O(cluster size) only on the zero-weight fallback.
//
// When wcss_trace is non-null it receives the WCSS after every iteration.
ClusteringRun lloyd(const SortedInput& input, const PrefixSums& prefix,
                    std::span<const double> initial_centroids, std::size_t max_iter,
                    IndexRange range, std::vector<double>* wcss_trace = nullptr);

// greedy_kmeanspp followed by lloyd; deterministic given (input, config).
// k == range size short-circuits to the identity clustering (one point per
// cluster, WCSS 0) without touching the random source.
//
// Throws std::invalid_argument when k is zero or exceeds the range size, and
// propagates "degenerate weights" from the first sampling step.
ClusteringRun kmeans_1d(const SortedInput& input, const PrefixSums& prefix,
                        const KMeansConfig& config, IndexRange range);

} // namespace kmeans1d
