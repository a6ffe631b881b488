#pragma once

#include <span>
#include <string>
#include <vector>

#include "kmeans1d/kcluster.hpp"
#include "kmeans1d/partition.hpp"

// Reference implementations used for verification and benchmarking. They are
// deliberately simple and slow: the naive pair mirrors the textbook O(n k)
// algorithms decision for decision (same tie rule, same draw order), and the
// dynamic program gives the exact optimum for cross-checking WCSS quality.
namespace kmeans1d::oracle {

struct OracleResult {
    Clustering clustering;
    const char* method = "";
};

// Textbook Lloyd over sorted 1D data: per-point nearest-centroid scan
// (distance ties go to the higher-index centroid), direct-summation centroid
// updates, stop when assignments repeat. Matches kmeans1d::lloyd's
// empty-cluster and zero-weight rules. O(i * k * n).
ClusteringRun naive_lloyd(std::span<const double> sorted_values,
                          std::span<const double> weights,
                          std::span<const double> initial_centroids,
                          std::size_t max_iter,
                          std::vector<double>* wcss_trace = nullptr);

// Greedy k-means++ with explicit D^2 arrays and direct-summation WCSS,
// consuming uniforms in the same documented order as greedy_kmeanspp:
// one draw for the first centroid, then batches of local_trials draws per
// round. O(l * k * n) per round.
std::vector<double> naive_greedy_kmeanspp(std::span<const double> sorted_values,
                                          std::span<const double> weights,
                                          const KMeansConfig& config,
                                          UniformSource& rng);

// Globally optimal 1D k-means by the O(k n^2) dynamic program over contiguous
// clusters: cost(j, m) = min over splits s of cost(s, m-1) + wcss(s..j).
OracleResult exact_dp(std::span<const double> sorted_values,
                      std::span<const double> weights, std::size_t k);

struct TwoClusterScan {
    OracleResult best;                            // WCSS-minimal division
    std::vector<std::size_t> convergent_divisions; // exactly those classify_division marks Convergent
};

// Scans every division of a sorted array, scoring each by direct-summation
// WCSS. Requires positive weight on at least two indices; throws
// std::invalid_argument("degenerate weights") otherwise.
TwoClusterScan exhaustive_two_cluster(std::span<const double> sorted_values,
                                      std::span<const double> weights);

struct TwoClusterAudit {
    bool ok = false;
    bool exact_fixed_point = false;    // one Lloyd step reproduced the output bit for bit
    bool documented_degenerate = false;
    std::size_t probes = 0;
    std::string detail;
};

// Runs two_cluster on the range and checks its output contract: convergent
// outputs must be exact Lloyd fixed points, everything else must match its
// documented degenerate shape. corrupt_tie_rule deliberately flips the
// boundary tie in the fixed-point re-assignment; it exists so the verify
// harness can prove it would catch a broken implementation.
TwoClusterAudit audit_two_cluster(const SortedInput& input, const PrefixSums& prefix,
                                  IndexRange range, bool corrupt_tie_rule = false);

} // namespace kmeans1d::oracle
