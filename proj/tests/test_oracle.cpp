#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>

#include "kmeans1d/oracle.hpp"
#include "kmeans1d/two_cluster.hpp"
#include "support.hpp"

using namespace kmeans1d;

namespace {

// Enumerates every split of sorted data into k contiguous non-empty clusters
// and returns the minimal direct-summation WCSS. Exponential; keep n tiny.
double brute_force_optimum(const std::vector<double>& values,
                           const std::vector<double>& weights, std::size_t k) {
    const std::size_t n = values.size();
    const auto segment = [&](std::size_t a, std::size_t b) {
        double wsum = 0.0, wx = 0.0, xsum = 0.0;
        for (std::size_t i = a; i < b; ++i) {
            wsum += weights[i];
            wx += weights[i] * values[i];
            xsum += values[i];
        }
        const double c = wsum == 0.0 ? xsum / static_cast<double>(b - a) : wx / wsum;
        double acc = 0.0;
        for (std::size_t i = a; i < b; ++i) {
            acc += weights[i] * (values[i] - c) * (values[i] - c);
        }
        return acc;
    };

    double best = std::numeric_limits<double>::infinity();
    std::vector<std::size_t> cuts(k - 1);
    const std::function<void(std::size_t, std::size_t)> recurse =
        [&](std::size_t idx, std::size_t from) {
            if (idx == cuts.size()) {
                double total = 0.0;
                std::size_t a = 0;
                for (const std::size_t cut : cuts) {
                    total += segment(a, cut);
                    a = cut;
                }
                total += segment(a, n);
                best = std::min(best, total);
                return;
            }
            for (std::size_t cut = from; cut + (cuts.size() - idx - 1) < n; ++cut) {
                cuts[idx] = cut;
                recurse(idx + 1, cut + 1);
            }
        };
    if (k == 1) {
        return segment(0, n);
    }
    recurse(0, 1);
    return best;
}

} // namespace

TEST_CASE("naive_lloyd reproduces the hand trace") {
    const std::vector<double> values{0, 1, 9, 10};
    const ClusteringRun run =
        oracle::naive_lloyd(values, {}, std::vector<double>{1, 9}, 300);
    CHECK(run.converged);
    CHECK(run.clustering.borders == std::vector<std::size_t>{0, 2, 4});
    CHECK(run.clustering.centroids[0] == doctest::Approx(0.5));
    CHECK(run.clustering.centroids[1] == doctest::Approx(9.5));

    const ClusteringRun settled =
        oracle::naive_lloyd(values, {}, std::vector<double>{0.5, 9.5}, 300);
    CHECK(settled.converged);
    CHECK(settled.iterations == 1);
}

TEST_CASE("naive_greedy_kmeanspp small contracts") {
    SUBCASE("k=1 is weighted sampling") {
        RandomSource rng(3);
        const auto centroids =
            oracle::naive_greedy_kmeanspp(std::vector<double>{1, 2, 3},
                                          std::vector<double>{1, 1, 1},
                                          {.k = 1, .seed = 3}, rng);
        CHECK(centroids.size() == 1);
    }
    SUBCASE("identical points give identical centroids") {
        RandomSource rng(4);
        const auto centroids = oracle::naive_greedy_kmeanspp(
            std::vector<double>{4, 4, 4, 4}, {}, {.k = 3}, rng);
        CHECK(centroids == std::vector<double>{4, 4, 4});
    }
    SUBCASE("zero total weight fails") {
        RandomSource rng(5);
        CHECK_THROWS_WITH_AS(
            oracle::naive_greedy_kmeanspp(std::vector<double>{1, 2},
                                          std::vector<double>{0, 0}, {.k = 1}, rng),
            "degenerate weights", std::invalid_argument);
    }
}

TEST_CASE("exact_dp degenerate and canonical cases") {
    const std::vector<double> values{0, 1, 9, 10};

    const auto identity = oracle::exact_dp(values, {}, 4);
    CHECK(identity.clustering.wcss == doctest::Approx(0.0).epsilon(1e-12));

    const auto single = oracle::exact_dp(values, {}, 1);
    CHECK(single.clustering.wcss == doctest::Approx(82.0));  // mean 5: 25+16+16+25

    const auto pair = oracle::exact_dp(values, {}, 2);
    CHECK(pair.clustering.wcss == doctest::Approx(1.0));
    CHECK(pair.clustering.borders == std::vector<std::size_t>{0, 2, 4});

    CHECK_THROWS_AS(oracle::exact_dp(values, {}, 5), std::invalid_argument);
}

TEST_CASE("exact_dp matches exhaustive enumeration on tiny instances") {
    std::mt19937_64 rng(606);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 2 + rng() % 10;
        const auto vr = static_cast<testsupport::ValueRegime>(rng() % 2);
        const auto wr = trial % 3 == 0 ? testsupport::WeightRegime::kSparse
                                       : testsupport::WeightRegime::kPositive;
        const testsupport::Instance inst = testsupport::make_instance(n, vr, wr, rng());
        const std::size_t k = 1 + rng() % std::min<std::size_t>(3, n);

        const auto dp = oracle::exact_dp(inst.input.values, inst.input.weights, k);
        const double brute = brute_force_optimum(inst.input.values, inst.input.weights, k);
        CHECK(dp.clustering.wcss == doctest::Approx(brute).epsilon(1e-9));
    }
}

TEST_CASE("exact_dp lower-bounds every other method") {
    std::mt19937_64 rng(607);
    for (int trial = 0; trial < 80; ++trial) {
        const std::size_t n = 4 + rng() % 252;
        const testsupport::Instance inst = testsupport::make_instance(
            n, testsupport::ValueRegime::kDistinct,
            testsupport::WeightRegime::kOnes, rng());
        const std::size_t k = 2 + rng() % std::min<std::size_t>(7, n - 1);

        const auto dp = oracle::exact_dp(inst.input.values, inst.input.weights, k);
        const ClusteringRun fast =
            kmeans_1d(inst.input, inst.prefix, {.k = k, .seed = rng()}, {0, n});
        CHECK(dp.clustering.wcss <=
              fast.clustering.wcss + 1e-9 * std::max(1.0, fast.clustering.wcss));

        if (k == 2) {
            const Clustering two = two_cluster(inst.input, inst.prefix, {0, n});
            CHECK(dp.clustering.wcss <= two.wcss + 1e-9 * std::max(1.0, two.wcss));
        }
    }
}

TEST_CASE("exhaustive_two_cluster scan") {
    SUBCASE("canonical instance") {
        const auto scan = oracle::exhaustive_two_cluster(std::vector<double>{0, 1, 9, 10}, {});
        CHECK(scan.best.clustering.borders == std::vector<std::size_t>{0, 2, 4});
        CHECK(scan.best.clustering.wcss == doctest::Approx(1.0));
        CHECK(scan.convergent_divisions == std::vector<std::size_t>{2});
    }
    SUBCASE("symmetric bimodal data includes the center") {
        const std::vector<double> values{0, 1, 2, 10, 11, 12};
        const auto scan = oracle::exhaustive_two_cluster(values, {});
        const bool has_center =
            std::find(scan.convergent_divisions.begin(), scan.convergent_divisions.end(),
                      std::size_t{3}) != scan.convergent_divisions.end();
        CHECK(has_center);
    }
    SUBCASE("degenerate weights are rejected") {
        CHECK_THROWS_WITH_AS(
            oracle::exhaustive_two_cluster(std::vector<double>{1, 2, 3},
                                           std::vector<double>{0, 5, 0}),
            "degenerate weights", std::invalid_argument);
    }
    SUBCASE("convergent set equals the classify_division sweep") {
        std::mt19937_64 rng(608);
        for (int trial = 0; trial < 100; ++trial) {
            const std::size_t n = 2 + rng() % 126;
            const auto vr = static_cast<testsupport::ValueRegime>(rng() % 3);
            const testsupport::Instance inst = testsupport::make_instance(
                n, vr, testsupport::WeightRegime::kPositive, rng());

            const auto scan =
                oracle::exhaustive_two_cluster(inst.input.values, inst.input.weights);
            std::vector<std::size_t> expected;
            for (std::size_t d = 1; d < n; ++d) {
                if (classify_division(inst.input, inst.prefix, d, {0, n}).classification ==
                    Pointing::kConvergent) {
                    expected.push_back(d);
                }
            }
            CHECK(scan.convergent_divisions == expected);
        }
    }
}
