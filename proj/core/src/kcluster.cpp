#include "kmeans1d/kcluster.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace kmeans1d {

std::size_t KMeansConfig::resolved_local_trials() const {
    if (local_trials > 0) {
        return local_trials;
    }
    const std::size_t trials =
        2 + static_cast<std::size_t>(std::log(static_cast<double>(k)));
    return std::max<std::size_t>(1, trials);
}

double sample_first_centroid(const SortedInput& input, const PrefixSums& prefix,
                             IndexRange range, UniformSource& rng) {
    if (range.empty() || range.stop > input.size()) {
        throw std::invalid_argument("sample_first_centroid: bad range");
    }
    const double total = range_sum(prefix.weight, range);
    if (total <= 0.0) {
        throw std::invalid_argument("degenerate weights");
    }
    const double selector = rng.next_uniform() * total;
    // The cumulative array counts from index 0, so rebase the selector when
    // the range does not start there.
    const double rebased =
        range.start == 0 ? selector : selector + prefix.weight[range.start - 1];

    const double* lo = prefix.weight.data() + range.start;
    const double* hi = prefix.weight.data() + range.stop;
    std::size_t idx = static_cast<std::size_t>(
        std::lower_bound(lo, hi, rebased) - prefix.weight.data());
    // Rebasing can overshoot the last entry by one ulp; clamp inside the range.
    idx = std::min(idx, range.stop - 1);
    return input.values[idx];
}

double cumulative_inertia(std::span<const double> sorted_centroids,
                          std::span<const std::size_t> borders,
                          const PrefixSums& prefix, std::size_t upto) {
    double inertia = 0.0;
    for (std::size_t i = 0; i < sorted_centroids.size(); ++i) {
        const std::size_t start = borders[i];
        if (start >= upto) {
            break;
        }
        const std::size_t stop = std::min(borders[i + 1], upto);
        if (start == stop) {
            continue;
        }
        const IndexRange cluster{start, stop};
        const double q0 = range_sum(prefix.weight, cluster);
        const double q1 = range_sum(prefix.weighted_value, cluster);
        const double q2 = range_sum(prefix.weighted_square, cluster);
        const double c = sorted_centroids[i];
        inertia += q2 - 2.0 * c * q1 + c * c * q0;
    }
    return inertia;
}

CandidateSample sample_candidates(const SortedInput& input, const PrefixSums& prefix,
                                  std::span<const double> current_centroids,
                                  std::size_t count, IndexRange range,
                                  UniformSource& rng) {
    if (current_centroids.empty()) {
        throw std::invalid_argument("sample_candidates: no current centroids");
    }
    std::vector<double> sorted_centroids(current_centroids.begin(), current_centroids.end());
    std::sort(sorted_centroids.begin(), sorted_centroids.end());
    const std::vector<std::size_t> borders =
        centroids_to_borders(input, sorted_centroids, range);
    const double total_inertia =
        cumulative_inertia(sorted_centroids, borders, prefix, range.stop);

    // The whole batch is drawn before any search; this draw order is part of
    // the contract shared with the naive reference.
    std::vector<double> selectors(count);
    for (double& s : selectors) {
        s = rng.next_uniform() * total_inertia;
    }

    CandidateSample out;
    out.values.resize(count);
    if (total_inertia <= 0.0) {
        // Every point already sits on a centroid; nothing carries any mass.
        out.degenerate = true;
        std::fill(out.values.begin(), out.values.end(), input.values[range.start]);
        return out;
    }

    for (std::size_t t = 0; t < count; ++t) {
        const double selector = selectors[t];
        std::size_t floor = range.start + 1;
        std::size_t ceiling = range.stop;
        while (floor < ceiling) {
            const std::size_t mid = floor + (ceiling - floor) / 2;
            const double inertia = cumulative_inertia(sorted_centroids, borders, prefix, mid);
            if (inertia < selector) {
                floor = mid + 1;
            } else {
                ceiling = mid;
            }
        }
        out.values[t] = input.values[floor - 1];
    }
    return out;
}

std::vector<double> greedy_kmeanspp(const SortedInput& input, const PrefixSums& prefix,
                                    const KMeansConfig& config, IndexRange range,
                                    UniformSource& rng) {
    const std::size_t k = config.k;
    if (k == 0 || k > range.size()) {
        throw std::invalid_argument("greedy_kmeanspp: k out of range");
    }
    const std::size_t trials = config.resolved_local_trials();

    std::vector<double> centroids;
    centroids.reserve(k);
    centroids.push_back(sample_first_centroid(input, prefix, range, rng));

    std::vector<double> tentative;
    tentative.reserve(k);
    for (std::size_t round = 1; round < k; ++round) {
        const CandidateSample sample =
            sample_candidates(input, prefix, centroids, trials, range, rng);

        double best_wcss = std::numeric_limits<double>::infinity();
        double best_candidate = sample.values.front();
        for (const double candidate : sample.values) {
            tentative.assign(centroids.begin(), centroids.end());
            tentative.push_back(candidate);
            std::sort(tentative.begin(), tentative.end());
            const std::vector<std::size_t> borders =
                centroids_to_borders(input, tentative, range);
            const double wcss = cumulative_inertia(tentative, borders, prefix, range.stop);
            if (wcss < best_wcss) {
                best_wcss = wcss;
                best_candidate = candidate;
            }
        }
        centroids.push_back(best_candidate);
    }
    return centroids;
}

ClusteringRun lloyd(const SortedInput& input, const PrefixSums& prefix,
                    std::span<const double> initial_centroids, std::size_t max_iter,
                    IndexRange range, std::vector<double>* wcss_trace) {
    if (initial_centroids.empty()) {
        throw std::invalid_argument("lloyd: no centroids");
    }
    if (wcss_trace != nullptr) {
        wcss_trace->clear();
    }

    std::vector<double> centroids(initial_centroids.begin(), initial_centroids.end());
    std::sort(centroids.begin(), centroids.end());

    ClusteringRun run;
    std::vector<std::size_t> borders;
    bool have_borders = false;
    for (std::size_t iter = 0; iter < max_iter; ++iter) {
        std::vector<std::size_t> new_borders = centroids_to_borders(input, centroids, range);
        if (have_borders && new_borders == borders) {
            run.converged = true;
            break;
        }
        borders = std::move(new_borders);
        have_borders = true;

        for (std::size_t i = 0; i < centroids.size(); ++i) {
            const IndexRange cluster{borders[i], borders[i + 1]};
            if (cluster.empty()) {
                continue;  // empty cluster keeps its centroid
            }
            centroids[i] = range_centroid(prefix, input, cluster);
        }
        ++run.iterations;
        if (wcss_trace != nullptr) {
            wcss_trace->push_back(total_wcss(prefix, centroids, borders));
        }
    }

    run.clustering.wcss = total_wcss(prefix, centroids, borders);
    run.clustering.centroids = std::move(centroids);
    run.clustering.borders = std::move(borders);
    return run;
}

ClusteringRun kmeans_1d(const SortedInput& input, const PrefixSums& prefix,
                        const KMeansConfig& config, IndexRange range) {
    if (config.k == 0) {
        throw std::invalid_argument("kmeans_1d: k must be positive");
    }
    if (config.k > range.size()) {
        throw std::invalid_argument("kmeans_1d: k exceeds range size");
    }

    if (config.k == range.size()) {
        // Identity clustering: each point is its own centroid, WCSS 0.
        ClusteringRun run;
        run.converged = true;
        run.clustering.centroids.assign(input.values.begin() + static_cast<std::ptrdiff_t>(range.start),
                                        input.values.begin() + static_cast<std::ptrdiff_t>(range.stop));
        run.clustering.borders.resize(config.k + 1);
        for (std::size_t i = 0; i <= config.k; ++i) {
            run.clustering.borders[i] = range.start + i;
        }
        run.clustering.wcss = 0.0;
        return run;
    }

    RandomSource rng(config.seed);
    const std::vector<double> initial = greedy_kmeanspp(input, prefix, config, range, rng);
    return lloyd(input, prefix, initial, config.max_iter, range);
}

} // namespace kmeans1d
