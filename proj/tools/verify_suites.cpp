#include "verify_suites.hpp"

#include <cmath>
#include <random>

#include "kmeans1d/kcluster.hpp"
#include "kmeans1d/oracle.hpp"
#include "kmeans1d/synthetic.hpp"
#include "kmeans1d/two_cluster.hpp"

namespace cli {

namespace {

using namespace kmeans1d;

constexpr std::size_t kMaxFailingSeeds = 10;

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<double> continuous_values(std::size_t n, std::mt19937_64& rng) {
    std::vector<double> values(n);
    for (double& v : values) {
        v = 100.0 * uniform01(rng);
    }
    return values;
}

std::vector<double> mixed_regime_values(std::size_t n, std::mt19937_64& rng) {
    switch (rng() % 3) {
    case 0:
        return continuous_values(n, rng);
    case 1: {
        std::vector<double> pool(std::max<std::size_t>(1, n / 4));
        for (double& p : pool) {
            p = 100.0 * uniform01(rng);
        }
        std::vector<double> values(n);
        for (double& v : values) {
            v = pool[rng() % pool.size()];
        }
        return values;
    }
    default:
        return std::vector<double>(n, 100.0 * uniform01(rng) - 50.0);
    }
}

std::vector<double> mixed_regime_weights(std::size_t n, std::mt19937_64& rng) {
    switch (rng() % 4) {
    case 0:
        return synthetic::ones_weights(n);
    case 1:
        return synthetic::positive_weights(n, rng());
    case 2:
        return synthetic::sparse_weights(n, rng());
    default:
        return synthetic::single_nonzero_weights(n, rng());
    }
}

void record_failure(SuiteReport& report, std::uint64_t seed) {
    ++report.failures;
    if (report.failing_seeds.size() < kMaxFailingSeeds) {
        report.failing_seeds.push_back(seed);
    }
}

} // namespace

SuiteReport run_init_equivalence_suite(const SuiteOptions& options) {
    SuiteReport report;
    report.name = "init-equivalence";
    report.cases = options.cases > 0 ? options.cases : 80;

    for (std::size_t c = 0; c < report.cases; ++c) {
        const std::uint64_t seed = options.seed + c;
        std::mt19937_64 rng(seed * 977 + 13);
        static constexpr std::size_t kChoices[] = {2, 3, 8, 16};
        // n stays well above k; near-identity instances produce symmetric
        // candidate ties that floating point orders arbitrarily.
        const std::size_t k = kChoices[rng() % 4];
        const std::size_t n = 8 * k + rng() % (513 - 8 * k);
        const SortedInput input = sort_and_align(
            continuous_values(n, rng),
            rng() % 2 == 0 ? synthetic::ones_weights(n)
                           : synthetic::positive_weights(n, rng()));
        const PrefixSums prefix = build_prefix_sums(input);
        const KMeansConfig config{.k = k, .seed = seed};

        RandomSource fast_rng(config.seed);
        RandomSource naive_rng(config.seed);
        const auto fast = greedy_kmeanspp(input, prefix, config, {0, n}, fast_rng);
        const auto naive =
            oracle::naive_greedy_kmeanspp(input.values, input.weights, config, naive_rng);
        if (fast != naive) {
            record_failure(report, seed);
        }
    }
    return report;
}

SuiteReport run_lloyd_equivalence_suite(const SuiteOptions& options) {
    SuiteReport report;
    report.name = "lloyd-equivalence";
    report.cases = options.cases > 0 ? options.cases : 200;

    for (std::size_t c = 0; c < report.cases; ++c) {
        const std::uint64_t seed = options.seed + c;
        std::mt19937_64 rng(seed * 31337 + 7);
        const std::size_t n = 2 + rng() % 511;
        const std::size_t k = 1 + rng() % std::min<std::size_t>(16, n);
        const SortedInput input = sort_and_align(
            continuous_values(n, rng),
            rng() % 3 == 0 ? synthetic::sparse_weights(n, rng())
                           : synthetic::positive_weights(n, rng()));
        const PrefixSums prefix = build_prefix_sums(input);
        std::vector<double> init = continuous_values(k, rng);

        std::vector<double> trace;
        const ClusteringRun fast = lloyd(input, prefix, init, 300, {0, n}, &trace);
        const ClusteringRun naive =
            oracle::naive_lloyd(input.values, input.weights, init, 300);

        bool ok = fast.clustering.borders == naive.clustering.borders;
        for (std::size_t i = 0; ok && i < k; ++i) {
            const double a = fast.clustering.centroids[i];
            const double b = naive.clustering.centroids[i];
            ok = std::fabs(a - b) <= 1e-9 * std::max(1.0, std::fabs(b));
        }
        for (std::size_t t = 1; ok && t < trace.size(); ++t) {
            ok = trace[t] <= trace[t - 1] + 1e-9 * std::max(1.0, std::fabs(trace[t - 1]));
        }
        if (!ok) {
            record_failure(report, seed);
        }
    }
    return report;
}

SuiteReport run_two_cluster_suite(const SuiteOptions& options) {
    SuiteReport report;
    report.name = "two-cluster";
    report.cases = options.cases > 0 ? options.cases : 2000;

    for (std::size_t c = 0; c < report.cases; ++c) {
        const std::uint64_t seed = options.seed + c;
        std::mt19937_64 rng(seed * 6007 + 3);

        SortedInput input;
        if (c % 8 == 7) {
            // Crafted exact boundary tie: integer spacing puts a weightless
            // point precisely on the centroid midpoint, exercising the tie
            // rule with exact arithmetic.
            const double a = static_cast<double>(rng() % 2000) - 1000.0;
            const double h = static_cast<double>(1 + rng() % 100);
            input = SortedInput{{a, a + 2.0 * h, a + 4.0 * h}, {1.0, 0.0, 1.0}};
        } else {
            const std::size_t n = 1 + rng() % 512;
            input = sort_and_align(mixed_regime_values(n, rng),
                                   mixed_regime_weights(n, rng));
        }
        const PrefixSums prefix = build_prefix_sums(input);

        const oracle::TwoClusterAudit audit = oracle::audit_two_cluster(
            input, prefix, input.full_range(), options.corrupt_tie_rule);
        const double bound =
            std::ceil(std::log2(static_cast<double>(std::max<std::size_t>(input.size(), 1)))) + 2.0;
        if (!audit.ok || static_cast<double>(audit.probes) > bound) {
            record_failure(report, seed);
        }
    }
    return report;
}

SuiteReport run_dp_bound_suite(const SuiteOptions& options) {
    SuiteReport report;
    report.name = "dp-bound";
    report.cases = options.cases > 0 ? options.cases : 60;

    for (std::size_t c = 0; c < report.cases; ++c) {
        const std::uint64_t seed = options.seed + c;
        std::mt19937_64 rng(seed * 4099 + 29);
        // Instance sizes are capped at 4096; the dynamic program is quadratic.
        const std::size_t n = 2 + rng() % 511;
        const std::size_t k = 1 + rng() % std::min<std::size_t>(8, n);
        const SortedInput input = sort_and_align(synthetic::blob_values(n, 4, rng()));
        const PrefixSums prefix = build_prefix_sums(input);

        const auto dp = oracle::exact_dp(input.values, input.weights, k);
        const ClusteringRun fast = kmeans_1d(input, prefix, {.k = k, .seed = seed}, {0, n});

        bool ok = dp.clustering.wcss <=
                  fast.clustering.wcss + 1e-9 * std::max(1.0, fast.clustering.wcss);
        if (k == 2) {
            const Clustering two = two_cluster(input, prefix, input.full_range());
            ok = ok && dp.clustering.wcss <= two.wcss + 1e-9 * std::max(1.0, two.wcss);
        }
        if (!ok) {
            record_failure(report, seed);
        }
    }
    return report;
}

} // namespace cli
