// Command-line interface: clustering runs, oracle verification, scaling
// benchmarks, and the seed/upscale quantization workflow.

#include <cinttypes>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "common.hpp"
#include "verify_suites.hpp"

#include "kmeans1d/core_types.hpp"
#include "kmeans1d/kcluster.hpp"
#include "kmeans1d/oracle.hpp"
#include "kmeans1d/quantizer.hpp"
#include "kmeans1d/two_cluster.hpp"

using json = nlohmann::ordered_json;
using namespace kmeans1d;

namespace {

struct ClusterArgs {
    std::string path;
    std::string format = "csv";
    std::size_t k = 0;
    std::uint64_t seed = 0;
    std::size_t max_iter = 300;
    std::size_t local_trials = 0;
    bool with_weights = false;
    bool assume_sorted = false;
    bool fast_two_cluster = false;
};

SortedInput prepare_input(cli::ParsedInput&& parsed, bool assume_sorted) {
    if (!assume_sorted) {
        return sort_and_align(parsed.values, parsed.weights);
    }
    for (std::size_t i = 1; i < parsed.values.size(); ++i) {
        if (parsed.values[i - 1] > parsed.values[i]) {
            throw std::invalid_argument("--assume-sorted given but input is not sorted");
        }
    }
    SortedInput input;
    input.values = std::move(parsed.values);
    input.weights = parsed.weights.empty()
                        ? std::vector<double>(input.values.size(), 1.0)
                        : std::move(parsed.weights);
    return input;
}

int run_cluster(const ClusterArgs& args) {
    cli::ParsedInput parsed = cli::read_input(args.path, args.format, args.with_weights);

    const std::int64_t pre_start = cli::now_ns();
    const SortedInput input = prepare_input(std::move(parsed), args.assume_sorted);
    const PrefixSums prefix = build_prefix_sums(input);
    const std::int64_t preprocess_ns = cli::now_ns() - pre_start;

    const std::size_t n = input.size();
    if (args.k == 0 || args.k > n) {
        throw std::invalid_argument("k out of range for dataset of size " +
                                    std::to_string(n));
    }

    json report;
    std::int64_t main_ns = 0;
    if (args.k == 2 && args.fast_two_cluster) {
        TwoClusterStats stats;
        const std::int64_t main_start = cli::now_ns();
        const Clustering clustering = two_cluster(input, prefix, {0, n}, &stats);
        main_ns = cli::now_ns() - main_start;
        report["method"] = "two-cluster";
        report["n"] = n;
        report["k"] = 2;
        report["seed"] = args.seed;
        report["preprocess_ns"] = preprocess_ns;
        report["main_ns"] = main_ns;
        report["wcss"] = clustering.wcss;
        report["iterations"] = stats.probes;
        report["centroids"] = clustering.centroids;
        report["borders"] = clustering.borders;
    } else {
        const KMeansConfig config{.k = args.k,
                                  .max_iter = args.max_iter,
                                  .local_trials = args.local_trials,
                                  .seed = args.seed};
        const std::int64_t main_start = cli::now_ns();
        const ClusteringRun run = kmeans_1d(input, prefix, config, {0, n});
        main_ns = cli::now_ns() - main_start;
        report["method"] = "kcluster";
        report["n"] = n;
        report["k"] = args.k;
        report["seed"] = args.seed;
        report["preprocess_ns"] = preprocess_ns;
        report["main_ns"] = main_ns;
        report["wcss"] = run.clustering.wcss;
        report["iterations"] = run.iterations;
        report["centroids"] = run.clustering.centroids;
        report["borders"] = run.clustering.borders;
    }
    std::cout << report.dump(2) << "\n";
    return 0;
}

struct VerifyArgs {
    std::string suite = "all";
    std::size_t cases = 0;
    std::uint64_t seed = 0;
    bool corrupt_tie_rule = false;
};

int run_verify(const VerifyArgs& args) {
    const cli::SuiteOptions options{args.cases, args.seed, args.corrupt_tie_rule};

    std::vector<cli::SuiteReport> reports;
    const auto want = [&](const char* name) {
        return args.suite == "all" || args.suite == name;
    };
    if (want("init-equivalence")) {
        reports.push_back(cli::run_init_equivalence_suite(options));
    }
    if (want("lloyd-equivalence")) {
        reports.push_back(cli::run_lloyd_equivalence_suite(options));
    }
    if (want("two-cluster")) {
        reports.push_back(cli::run_two_cluster_suite(options));
    }
    if (want("dp-bound")) {
        reports.push_back(cli::run_dp_bound_suite(options));
    }
    if (reports.empty()) {
        throw std::invalid_argument("unknown suite: " + args.suite);
    }

    bool all_passed = true;
    for (const cli::SuiteReport& report : reports) {
        std::printf("suite %-17s %zu/%zu passed", report.name.c_str(),
                    report.cases - report.failures, report.cases);
        if (!report.passed()) {
            all_passed = false;
            std::printf("; failing seeds:");
            for (const std::uint64_t seed : report.failing_seeds) {
                std::printf(" %" PRIu64, seed);
            }
        }
        std::printf("\n");
    }
    std::printf(all_passed ? "all suites passed\n" : "verification FAILED\n");
    return all_passed ? 0 : 1;
}

struct BenchArgs {
    std::string grid = "n=65536,1048576;k=2,16";
    std::string methods = "kcluster,naive";
    std::string data = "uniform";
    std::size_t reps = 5;
    std::uint64_t seed = 0;
};

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::size_t from = 0;
    while (from <= text.size()) {
        const std::size_t to = text.find(sep, from);
        if (to == std::string::npos) {
            parts.push_back(text.substr(from));
            break;
        }
        parts.push_back(text.substr(from, to - from));
        from = to + 1;
    }
    return parts;
}

struct BenchGrid {
    std::vector<std::size_t> sizes;
    std::vector<std::size_t> ks;
};

BenchGrid parse_grid(const std::string& grid) {
    BenchGrid out;
    for (const std::string& clause : split(grid, ';')) {
        const std::size_t eq = clause.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("bad --grid clause: " + clause);
        }
        const std::string key = clause.substr(0, eq);
        std::vector<std::size_t>* target = nullptr;
        if (key == "n") {
            target = &out.sizes;
        } else if (key == "k") {
            target = &out.ks;
        } else {
            throw std::invalid_argument("bad --grid key: " + key);
        }
        for (const std::string& item : split(clause.substr(eq + 1), ',')) {
            target->push_back(static_cast<std::size_t>(std::stoull(item)));
        }
    }
    if (out.sizes.empty() || out.ks.empty()) {
        throw std::invalid_argument("--grid needs both n= and k= lists");
    }
    return out;
}

int run_bench(const BenchArgs& args) {
    const BenchGrid grid = parse_grid(args.grid);
    const std::vector<std::string> methods = split(args.methods, ',');
    if (args.reps == 0) {
        throw std::invalid_argument("--reps must be positive");
    }

    std::printf("method,n,k,seed,preprocess_ns,main_ns,wcss,iterations\n");
    for (const std::size_t n : grid.sizes) {
        const std::uint64_t data_seed = args.seed ^ (0x9e3779b97f4a7c15ULL * n);
        const std::vector<double> raw = cli::generate_dataset(args.data, n, data_seed);

        SortedInput input;
        PrefixSums prefix;
        std::vector<std::int64_t> pre_times(args.reps);
        for (std::size_t rep = 0; rep < args.reps; ++rep) {
            const std::int64_t t0 = cli::now_ns();
            input = sort_and_align(raw);
            prefix = build_prefix_sums(input);
            pre_times[rep] = cli::now_ns() - t0;
        }
        const std::int64_t preprocess_ns = cli::median_ns(pre_times);

        for (const std::size_t k : grid.ks) {
            if (k > n) {
                continue;
            }
            for (const std::string& method : methods) {
                if (method == "two-cluster" && k != 2) {
                    continue;  // the fast path solves k=2 only
                }
                std::vector<std::int64_t> times(args.reps);
                double wcss = 0.0;
                std::size_t iterations = 0;
                for (std::size_t rep = 0; rep < args.reps; ++rep) {
                    if (method == "kcluster") {
                        const KMeansConfig config{.k = k, .seed = data_seed};
                        const std::int64_t t0 = cli::now_ns();
                        const ClusteringRun run = kmeans_1d(input, prefix, config, {0, n});
                        times[rep] = cli::now_ns() - t0;
                        wcss = run.clustering.wcss;
                        iterations = run.iterations;
                    } else if (method == "two-cluster") {
                        TwoClusterStats stats;
                        const std::int64_t t0 = cli::now_ns();
                        const Clustering run = two_cluster(input, prefix, {0, n}, &stats);
                        times[rep] = cli::now_ns() - t0;
                        wcss = run.wcss;
                        iterations = stats.probes;
                    } else if (method == "naive") {
                        const KMeansConfig config{.k = k, .seed = data_seed};
                        const std::int64_t t0 = cli::now_ns();
                        RandomSource rng(config.seed);
                        const auto init = oracle::naive_greedy_kmeanspp(
                            input.values, input.weights, config, rng);
                        const ClusteringRun run = oracle::naive_lloyd(
                            input.values, input.weights, init, config.max_iter);
                        times[rep] = cli::now_ns() - t0;
                        wcss = run.clustering.wcss;
                        iterations = run.iterations;
                    } else {
                        throw std::invalid_argument("unknown method: " + method);
                    }
                }
                std::printf("%s,%zu,%zu,%" PRIu64 ",%" PRId64 ",%" PRId64 ",%.17g,%zu\n",
                            method.c_str(), n, k, data_seed, preprocess_ns,
                            cli::median_ns(times), wcss, iterations);
            }
        }
    }
    return 0;
}

struct QuantizeArgs {
    std::string path;
    std::string format = "csv";
    std::size_t n = 14336;
    std::uint64_t seed = 0;
    std::size_t seed_bits = 3;
    std::size_t target_bits = 8;
    bool with_weights = false;
};

int run_quantize(const QuantizeArgs& args) {
    if (args.seed_bits > args.target_bits) {
        throw std::invalid_argument("--seed-bits must not exceed --target-bits");
    }

    std::vector<double> values;
    std::vector<double> weights;
    if (!args.path.empty()) {
        cli::ParsedInput parsed = cli::read_input(args.path, args.format, args.with_weights);
        values = std::move(parsed.values);
        weights = std::move(parsed.weights);
    } else {
        values = synthetic::normal_channel(args.n, args.seed);
    }

    const std::int64_t pre_start = cli::now_ns();
    const TrackedInput tracked = sort_and_align_tracked(values, weights);
    const PrefixSums prefix = build_prefix_sums(tracked.input);
    const std::int64_t preprocess_ns = cli::now_ns() - pre_start;

    if ((std::size_t{1} << args.seed_bits) > tracked.input.size()) {
        throw std::invalid_argument("2^seed-bits exceeds the channel length");
    }

    json report;
    report["method"] = "quantize";
    report["n"] = tracked.input.size();
    report["seed"] = args.seed;
    report["seed_bits"] = args.seed_bits;
    report["target_bits"] = args.target_bits;
    report["preprocess_ns"] = preprocess_ns;
    report["levels"] = json::array();

    const KMeansConfig config{.seed = args.seed};
    std::int64_t t0 = cli::now_ns();
    Codebook book = seed_codebook(tracked.input, prefix, args.seed_bits, config);
    std::int64_t elapsed = cli::now_ns() - t0;
    report["levels"].push_back({{"bits", book.bits},
                                {"k", book.levels()},
                                {"wcss", book.wcss},
                                {"main_ns", elapsed},
                                {"provenance", "seed"}});

    for (std::size_t bits = args.seed_bits + 1; bits <= args.target_bits; ++bits) {
        t0 = cli::now_ns();
        book = upscale(book, tracked.input, prefix);
        elapsed = cli::now_ns() - t0;
        report["levels"].push_back({{"bits", book.bits},
                                    {"k", book.levels()},
                                    {"wcss", book.wcss},
                                    {"main_ns", elapsed},
                                    {"provenance", "upscaled"}});
    }

    report["codebook"] = {{"bits", book.bits},
                          {"centroids", book.centroids},
                          {"borders", book.borders},
                          {"wcss", book.wcss}};
    std::cout << report.dump(2) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"log-time 1D k-means: clustering, verification, benchmarks, quantization"};
    app.require_subcommand(1);

    ClusterArgs cluster_args;
    CLI::App* cluster = app.add_subcommand("cluster", "cluster a dataset and print a JSON report");
    cluster->add_option("input", cluster_args.path, "input file")->required();
    cluster->add_option("--k", cluster_args.k, "number of clusters")->required();
    cluster->add_option("--seed", cluster_args.seed, "random seed");
    cluster->add_option("--max-iter", cluster_args.max_iter, "Lloyd iteration cap");
    cluster->add_option("--local-trials", cluster_args.local_trials,
                        "greedy candidates per round (0 = 2 + floor(ln k))");
    cluster->add_flag("--weights", cluster_args.with_weights, "expect a value,weight column pair");
    cluster->add_flag("--assume-sorted", cluster_args.assume_sorted, "skip sorting");
    cluster->add_flag("--fast-two-cluster", cluster_args.fast_two_cluster,
                      "use the O(log n) binary-search solver when k=2");
    cluster->add_option("--format", cluster_args.format, "input format")
        ->check(CLI::IsMember({"csv", "raw"}));

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "run randomized oracle-equivalence suites");
    verify->add_option("--suite", verify_args.suite, "suite to run")
        ->check(CLI::IsMember({"all", "init-equivalence", "lloyd-equivalence",
                               "two-cluster", "dp-bound"}));
    verify->add_option("--cases", verify_args.cases, "cases per suite (0 = default)");
    verify->add_option("--seed", verify_args.seed, "base seed");
    verify->add_flag("--corrupt-tie-rule", verify_args.corrupt_tie_rule,
                     "testing aid: break the fixed-point tie rule")
        ->group("");

    BenchArgs bench_args;
    CLI::App* bench = app.add_subcommand("bench", "print a CSV timing table");
    bench->add_option("--grid", bench_args.grid, "grid, e.g. 'n=65536,1048576;k=2,16'");
    bench->add_option("--methods", bench_args.methods, "comma list: kcluster,two-cluster,naive");
    bench->add_option("--data", bench_args.data, "synthetic family")
        ->check(CLI::IsMember({"uniform", "blobs"}));
    bench->add_option("--reps", bench_args.reps, "repetitions per cell (median reported)");
    bench->add_option("--seed", bench_args.seed, "base seed");

    QuantizeArgs quantize_args;
    CLI::App* quantize = app.add_subcommand("quantize", "seed/upscale codebook workflow");
    quantize->add_option("--input", quantize_args.path, "channel file (default: synthetic)");
    quantize->add_option("--format", quantize_args.format, "input format")
        ->check(CLI::IsMember({"csv", "raw"}));
    quantize->add_option("--n", quantize_args.n, "synthetic channel length");
    quantize->add_option("--seed", quantize_args.seed, "random seed");
    quantize->add_option("--seed-bits", quantize_args.seed_bits, "seed codebook bit width");
    quantize->add_option("--target-bits", quantize_args.target_bits, "final bit width");
    quantize->add_flag("--weights", quantize_args.with_weights, "expect a weight column");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // Flag misuse is a validation failure (exit 1); --help stays 0.
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (cluster->parsed()) {
            return run_cluster(cluster_args);
        }
        if (verify->parsed()) {
            return run_verify(verify_args);
        }
        if (bench->parsed()) {
            return run_bench(bench_args);
        }
        if (quantize->parsed()) {
            return run_quantize(quantize_args);
        }
    } catch (const cli::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
