#include <benchmark/benchmark.h>

#include <cstdint>

#include "kmeans1d/core_types.hpp"
#include "kmeans1d/kcluster.hpp"
#include "kmeans1d/oracle.hpp"
#include "kmeans1d/quantizer.hpp"
#include "kmeans1d/synthetic.hpp"
#include "kmeans1d/two_cluster.hpp"

using namespace kmeans1d;

namespace {

struct Prepared {
    SortedInput input;
    PrefixSums prefix;
};

Prepared prepare(std::size_t n, std::uint64_t seed) {
    Prepared p;
    p.input = sort_and_align(synthetic::uniform_values(n, seed));
    p.prefix = build_prefix_sums(p.input);
    return p;
}

} // namespace

static void BM_Preprocess(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const auto raw = synthetic::uniform_values(n, 1);
    for (auto _ : state) {
        const SortedInput input = sort_and_align(raw);
        const PrefixSums prefix = build_prefix_sums(input);
        benchmark::DoNotOptimize(prefix.weight.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Preprocess)->RangeMultiplier(4)->Range(1 << 12, 1 << 22)->Complexity();

static void BM_TwoClusterMain(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const Prepared p = prepare(n, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(two_cluster(p.input, p.prefix, {0, n}).wcss);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TwoClusterMain)->RangeMultiplier(4)->Range(1 << 12, 1 << 22)->Complexity();

static void BM_KClusterMain(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const std::size_t k = static_cast<std::size_t>(state.range(1));
    const Prepared p = prepare(n, 3);
    const KMeansConfig config{.k = k, .seed = 3};
    for (auto _ : state) {
        benchmark::DoNotOptimize(kmeans_1d(p.input, p.prefix, config, {0, n}).clustering.wcss);
    }
}
BENCHMARK(BM_KClusterMain)
    ->ArgsProduct({{1 << 16, 1 << 20}, {2, 16, 128}});

static void BM_NaiveMain(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const std::size_t k = static_cast<std::size_t>(state.range(1));
    const Prepared p = prepare(n, 3);
    const KMeansConfig config{.k = k, .seed = 3};
    for (auto _ : state) {
        RandomSource rng(config.seed);
        const auto init =
            oracle::naive_greedy_kmeanspp(p.input.values, p.input.weights, config, rng);
        const auto run =
            oracle::naive_lloyd(p.input.values, p.input.weights, init, config.max_iter);
        benchmark::DoNotOptimize(run.clustering.wcss);
    }
}
BENCHMARK(BM_NaiveMain)->ArgsProduct({{1 << 16}, {2, 16}})->Unit(benchmark::kMillisecond);

static void BM_QuantizerSeed(benchmark::State& state) {
    const Prepared p = prepare(14336, 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(seed_codebook(p.input, p.prefix, 3, {.seed = 4}).wcss);
    }
}
BENCHMARK(BM_QuantizerSeed);

static void BM_QuantizerUpscaleLadder(benchmark::State& state) {
    const Prepared p = prepare(14336, 4);
    const Codebook seed = seed_codebook(p.input, p.prefix, 3, {.seed = 4});
    for (auto _ : state) {
        Codebook book = seed;
        for (std::size_t bits = 4; bits <= 8; ++bits) {
            book = upscale(book, p.input, p.prefix);
        }
        benchmark::DoNotOptimize(book.wcss);
    }
}
BENCHMARK(BM_QuantizerUpscaleLadder);

BENCHMARK_MAIN();
