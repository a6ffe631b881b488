#include "kmeans1d/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "kmeans1d/two_cluster.hpp"

namespace kmeans1d::oracle {

namespace {

std::vector<double> ones_if_empty(std::span<const double> weights, std::size_t n) {
    if (weights.empty()) {
        return std::vector<double>(n, 1.0);
    }
    if (weights.size() != n) {
        throw std::invalid_argument("weights length mismatch");
    }
    return std::vector<double>(weights.begin(), weights.end());
}

void require_sorted(std::span<const double> values) {
    if (!std::is_sorted(values.begin(), values.end())) {
        throw std::invalid_argument("values must be sorted ascending");
    }
}

// Nearest centroid by per-point scan; a distance tie goes to the
// higher-index centroid, matching the midpoint bisection rule.
std::size_t nearest_centroid(double x, std::span<const double> centroids) {
    std::size_t best = 0;
    double best_dist = std::abs(x - centroids[0]);
    for (std::size_t m = 1; m < centroids.size(); ++m) {
        const double dist = std::abs(x - centroids[m]);
        if (dist <= best_dist) {
            best = m;
            best_dist = dist;
        }
    }
    return best;
}

double direct_wcss(std::span<const double> values, std::span<const double> weights,
                   std::span<const double> centroids,
                   std::span<const std::size_t> assignment) {
    double acc = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double d = values[i] - centroids[assignment[i]];
        acc += weights[i] * d * d;
    }
    return acc;
}

} // namespace

ClusteringRun naive_lloyd(std::span<const double> sorted_values,
                          std::span<const double> weights,
                          std::span<const double> initial_centroids,
                          std::size_t max_iter,
                          std::vector<double>* wcss_trace) {
    require_sorted(sorted_values);
    const std::size_t n = sorted_values.size();
    if (n == 0 || initial_centroids.empty()) {
        throw std::invalid_argument("naive_lloyd: empty input");
    }
    const std::vector<double> w = ones_if_empty(weights, n);
    if (wcss_trace != nullptr) {
        wcss_trace->clear();
    }

    std::vector<double> centroids(initial_centroids.begin(), initial_centroids.end());
    std::sort(centroids.begin(), centroids.end());
    const std::size_t k = centroids.size();

    ClusteringRun run;
    std::vector<std::size_t> assignment(n);
    std::vector<std::size_t> previous;
    for (std::size_t iter = 0; iter < max_iter; ++iter) {
        for (std::size_t i = 0; i < n; ++i) {
            assignment[i] = nearest_centroid(sorted_values[i], centroids);
        }
        if (!previous.empty() && assignment == previous) {
            run.converged = true;
            break;
        }
        previous = assignment;

        for (std::size_t m = 0; m < k; ++m) {
            double weight_sum = 0.0;
            double weighted_x = 0.0;
            double plain_x = 0.0;
            std::size_t count = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (assignment[i] != m) {
                    continue;
                }
                weight_sum += w[i];
                weighted_x += w[i] * sorted_values[i];
                plain_x += sorted_values[i];
                ++count;
            }
            if (count == 0) {
                continue;  // empty cluster keeps its centroid
            }
            centroids[m] = weight_sum == 0.0 ? plain_x / static_cast<double>(count)
                                             : weighted_x / weight_sum;
        }
        ++run.iterations;
        if (wcss_trace != nullptr) {
            wcss_trace->push_back(direct_wcss(sorted_values, w, centroids, previous));
        }
    }

    // Assignments over sorted data with sorted centroids are non-decreasing,
    // so the clusters are contiguous and counts give the borders.
    std::vector<std::size_t> counts(k, 0);
    for (const std::size_t a : previous) {
        ++counts[a];
    }
    run.clustering.borders.resize(k + 1);
    run.clustering.borders[0] = 0;
    for (std::size_t m = 0; m < k; ++m) {
        run.clustering.borders[m + 1] = run.clustering.borders[m] + counts[m];
    }
    run.clustering.wcss = direct_wcss(sorted_values, w, centroids, previous);
    run.clustering.centroids = std::move(centroids);
    return run;
}

std::vector<double> naive_greedy_kmeanspp(std::span<const double> sorted_values,
                                          std::span<const double> weights,
                                          const KMeansConfig& config,
                                          UniformSource& rng) {
    require_sorted(sorted_values);
    const std::size_t n = sorted_values.size();
    const std::size_t k = config.k;
    if (k == 0 || k > n) {
        throw std::invalid_argument("naive_greedy_kmeanspp: k out of range");
    }
    const std::vector<double> w = ones_if_empty(weights, n);
    const std::size_t trials = config.resolved_local_trials();

    std::vector<double> cumulative_weight(n);
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += w[i];
        cumulative_weight[i] = acc;
    }
    if (acc <= 0.0) {
        throw std::invalid_argument("degenerate weights");
    }

    std::vector<double> centroids;
    centroids.reserve(k);
    {
        const double selector = rng.next_uniform() * cumulative_weight[n - 1];
        std::size_t idx = n - 1;
        for (std::size_t i = 0; i < n; ++i) {
            if (cumulative_weight[i] >= selector) {
                idx = i;
                break;
            }
        }
        centroids.push_back(sorted_values[idx]);
    }

    // Squared distance to the nearest chosen centroid, maintained explicitly.
    std::vector<double> nearest_sq(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double d = sorted_values[i] - centroids[0];
        nearest_sq[i] = d * d;
    }

    std::vector<double> scan(n + 1);
    std::vector<double> selectors(trials);
    for (std::size_t round = 1; round < k; ++round) {
        scan[0] = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            scan[i + 1] = scan[i] + w[i] * nearest_sq[i];
        }
        const double total_inertia = scan[n];

        for (double& s : selectors) {
            s = rng.next_uniform() * total_inertia;
        }

        double best_wcss = std::numeric_limits<double>::infinity();
        double best_candidate = sorted_values[0];
        for (const double selector : selectors) {
            std::size_t j = n;
            for (std::size_t m = 1; m <= n; ++m) {
                if (scan[m] >= selector) {
                    j = m;
                    break;
                }
            }
            const double candidate = sorted_values[j - 1];

            double wcss = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                const double d = sorted_values[i] - candidate;
                wcss += w[i] * std::min(nearest_sq[i], d * d);
            }
            if (wcss < best_wcss) {
                best_wcss = wcss;
                best_candidate = candidate;
            }
        }
        centroids.push_back(best_candidate);
        for (std::size_t i = 0; i < n; ++i) {
            const double d = sorted_values[i] - best_candidate;
            nearest_sq[i] = std::min(nearest_sq[i], d * d);
        }
    }
    return centroids;
}

OracleResult exact_dp(std::span<const double> sorted_values,
                      std::span<const double> weights, std::size_t k) {
    require_sorted(sorted_values);
    const std::size_t n = sorted_values.size();
    if (k == 0 || k > n) {
        throw std::invalid_argument("exact_dp: k out of range");
    }
    const std::vector<double> w = ones_if_empty(weights, n);

    // Zero-padded cumulative arrays so a segment query is one subtraction.
    std::vector<double> p0(n + 1, 0.0), p1(n + 1, 0.0), p2(n + 1, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        p0[i + 1] = p0[i] + w[i];
        p1[i + 1] = p1[i] + w[i] * sorted_values[i];
        p2[i + 1] = p2[i] + w[i] * sorted_values[i] * sorted_values[i];
    }
    // Weighted WCSS of [a, b): q2 - q1^2/q0. A weightless segment costs 0.
    const auto segment_cost = [&](std::size_t a, std::size_t b) {
        const double q0 = p0[b] - p0[a];
        if (q0 == 0.0) {
            return 0.0;
        }
        const double q1 = p1[b] - p1[a];
        return (p2[b] - p2[a]) - q1 * q1 / q0;
    };

    std::vector<double> prev(n + 1), cur(n + 1);
    std::vector<std::uint32_t> split(k * (n + 1), 0);
    for (std::size_t j = 0; j <= n; ++j) {
        prev[j] = segment_cost(0, j);
    }
    for (std::size_t m = 2; m <= k; ++m) {
        std::uint32_t* split_row = split.data() + (m - 1) * (n + 1);
        for (std::size_t j = m; j <= n; ++j) {
            double best = std::numeric_limits<double>::infinity();
            std::size_t best_split = m - 1;
            for (std::size_t s = m - 1; s < j; ++s) {
                const double cost = prev[s] + segment_cost(s, j);
                if (cost < best) {
                    best = cost;
                    best_split = s;
                }
            }
            cur[j] = best;
            split_row[j] = static_cast<std::uint32_t>(best_split);
        }
        std::swap(prev, cur);
    }

    OracleResult out;
    out.method = "exact-dp";
    out.clustering.wcss = prev[n];
    out.clustering.borders.resize(k + 1);
    out.clustering.borders[k] = n;
    for (std::size_t m = k; m >= 2; --m) {
        const std::uint32_t* split_row = split.data() + (m - 1) * (n + 1);
        out.clustering.borders[m - 1] = split_row[out.clustering.borders[m]];
    }
    out.clustering.borders[0] = 0;

    out.clustering.centroids.resize(k);
    for (std::size_t m = 0; m < k; ++m) {
        const std::size_t a = out.clustering.borders[m];
        const std::size_t b = out.clustering.borders[m + 1];
        const double q0 = p0[b] - p0[a];
        if (q0 == 0.0) {
            double acc = 0.0;
            for (std::size_t i = a; i < b; ++i) {
                acc += sorted_values[i];
            }
            out.clustering.centroids[m] = acc / static_cast<double>(b - a);
        } else {
            out.clustering.centroids[m] = (p1[b] - p1[a]) / q0;
        }
    }
    return out;
}

TwoClusterScan exhaustive_two_cluster(std::span<const double> sorted_values,
                                      std::span<const double> weights) {
    require_sorted(sorted_values);
    const std::size_t n = sorted_values.size();
    if (n < 2) {
        throw std::invalid_argument("exhaustive_two_cluster: need at least two points");
    }
    const std::vector<double> w = ones_if_empty(weights, n);
    std::size_t positive = 0;
    for (const double wi : w) {
        positive += wi > 0.0 ? 1 : 0;
    }
    if (positive < 2) {
        throw std::invalid_argument("degenerate weights");
    }

    // Direct-summation side mean with the unweighted fallback.
    const auto side_mean = [&](std::size_t a, std::size_t b) {
        double weight_sum = 0.0;
        double weighted_x = 0.0;
        double plain_x = 0.0;
        for (std::size_t i = a; i < b; ++i) {
            weight_sum += w[i];
            weighted_x += w[i] * sorted_values[i];
            plain_x += sorted_values[i];
        }
        return weight_sum == 0.0 ? plain_x / static_cast<double>(b - a)
                                 : weighted_x / weight_sum;
    };

    TwoClusterScan scan;
    scan.best.method = "exhaustive-two-cluster";
    double best_wcss = std::numeric_limits<double>::infinity();
    for (std::size_t d = 1; d < n; ++d) {
        const double left = side_mean(0, d);
        const double right = side_mean(d, n);
        double wcss = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double c = i < d ? left : right;
            const double delta = sorted_values[i] - c;
            wcss += w[i] * delta * delta;
        }
        if (wcss < best_wcss) {
            best_wcss = wcss;
            scan.best.clustering.centroids = {left, right};
            scan.best.clustering.borders = {0, d, n};
            scan.best.clustering.wcss = wcss;
        }
    }

    SortedInput input{std::vector<double>(sorted_values.begin(), sorted_values.end()), w};
    const PrefixSums prefix = build_prefix_sums(input);
    const IndexRange range = input.full_range();
    for (std::size_t d = 1; d < n; ++d) {
        if (range_sum(prefix.weight, {0, d}) == 0.0 ||
            range_sum(prefix.weight, {d, n}) == 0.0) {
            continue;
        }
        if (classify_division(input, prefix, d, range).classification ==
            Pointing::kConvergent) {
            scan.convergent_divisions.push_back(d);
        }
    }
    return scan;
}

namespace {

// One assignment + update step from the returned centroids, with the same
// empty-cluster and zero-weight rules as lloyd. corrupt_tie flips the
// boundary tie (first value strictly greater than the midpoint) and exists
// only to prove the audit detects a wrong tie rule.
struct SteppedClustering {
    std::vector<std::size_t> borders;
    std::vector<double> centroids;
};

SteppedClustering lloyd_step(const SortedInput& input, const PrefixSums& prefix,
                             const Clustering& clustering, IndexRange range,
                             bool corrupt_tie) {
    SteppedClustering step;
    if (corrupt_tie) {
        const std::size_t k = clustering.centroids.size();
        step.borders.assign(k + 1, range.start);
        step.borders[k] = range.stop;
        for (std::size_t i = 1; i < k; ++i) {
            const double midpoint =
                (clustering.centroids[i - 1] + clustering.centroids[i]) / 2.0;
            step.borders[i] = static_cast<std::size_t>(
                std::upper_bound(input.values.data() + range.start,
                                 input.values.data() + range.stop, midpoint) -
                input.values.data());
        }
    } else {
        step.borders = centroids_to_borders(input, clustering.centroids, range);
    }
    step.centroids = clustering.centroids;
    for (std::size_t i = 0; i < step.centroids.size(); ++i) {
        const IndexRange cluster{step.borders[i], step.borders[i + 1]};
        if (cluster.empty()) {
            continue;
        }
        step.centroids[i] = range_centroid(prefix, input, cluster);
    }
    return step;
}

} // namespace

TwoClusterAudit audit_two_cluster(const SortedInput& input, const PrefixSums& prefix,
                                  IndexRange range, bool corrupt_tie_rule) {
    TwoClusterAudit audit;
    TwoClusterStats stats;
    const Clustering result = two_cluster(input, prefix, range, &stats);
    audit.probes = stats.probes;

    const std::size_t start = range.start;
    const std::size_t stop = range.stop;
    if (result.centroids.size() != 2 || result.borders.size() != 3 ||
        result.borders[0] != start || result.borders[2] != stop ||
        result.borders[1] < start || result.borders[1] > stop ||
        !(result.centroids[0] <= result.centroids[1])) {
        audit.detail = "malformed clustering shape";
        return audit;
    }

    if (stats.unweighted_rerun) {
        if (result.wcss != 0.0) {
            audit.detail = "unweighted rerun must report zero WCSS";
            return audit;
        }
        audit.ok = true;
        audit.documented_degenerate = true;
        return audit;
    }

    switch (stats.outcome) {
    case TwoClusterOutcome::kSizeOne:
    case TwoClusterOutcome::kSizeTwo:
    case TwoClusterOutcome::kSingleWeight:
    case TwoClusterOutcome::kSingleValueMass:
    case TwoClusterOutcome::kScopeCollapse:
        audit.ok = true;
        audit.documented_degenerate = true;
        return audit;
    case TwoClusterOutcome::kConvergent: {
        const double midpoint = (result.centroids[0] + result.centroids[1]) / 2.0;
        if (result.borders[1] > start && midpoint == input.values[result.borders[1] - 1]) {
            audit.ok = true;
            audit.documented_degenerate = true;  // boundary tie
            return audit;
        }
        const SteppedClustering step =
            lloyd_step(input, prefix, result, range, corrupt_tie_rule);
        audit.exact_fixed_point =
            step.borders == result.borders && step.centroids == result.centroids;
        audit.ok = audit.exact_fixed_point;
        if (!audit.ok) {
            audit.detail = "convergent output is not an exact Lloyd fixed point";
        }
        return audit;
    }
    }
    audit.detail = "unknown outcome";
    return audit;
}

} // namespace kmeans1d::oracle
