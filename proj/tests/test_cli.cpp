#include "doctest.h"

// End-to-end checks of the command-line interface: each case invokes the
// built binary as a subprocess and inspects its output and exit code.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "kmeans1d/core_types.hpp"
#include "kmeans1d/quantizer.hpp"
#include "kmeans1d/synthetic.hpp"
#include "kmeans1d/two_cluster.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args) {
    const std::string out_path = "/tmp/kmeans1d_cli_out.txt";
    const std::string command =
        std::string(KMEANS1D_CLI_PATH) + " " + args + " > " + out_path + " 2>&1";
    const int status = std::system(command.c_str());

    RunResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    result.output = buffer.str();
    return result;
}

std::string write_temp(const std::string& name, const std::string& contents) {
    const std::string path = "/tmp/" + name;
    std::ofstream out(path);
    out << contents;
    return path;
}

// Timing fields vary run to run; null them before comparing reports.
nlohmann::json strip_timings(const std::string& text) {
    nlohmann::json parsed = nlohmann::json::parse(text);
    parsed.erase("preprocess_ns");
    parsed.erase("main_ns");
    if (parsed.contains("levels")) {
        for (auto& level : parsed["levels"]) {
            level.erase("main_ns");
        }
    }
    return parsed;
}

} // namespace

TEST_CASE("cluster subcommand") {
    const std::string path = write_temp("cli_four_points.csv", "0\n1\n9\n10\n");

    SUBCASE("fast two-cluster path") {
        const RunResult run = run_cli("cluster " + path + " --k 2 --fast-two-cluster");
        REQUIRE(run.exit_code == 0);
        const auto report = nlohmann::json::parse(run.output);
        CHECK(report["method"] == "two-cluster");
        CHECK(report["centroids"][0].get<double>() == doctest::Approx(0.5));
        CHECK(report["centroids"][1].get<double>() == doctest::Approx(9.5));
        CHECK(report["borders"] == nlohmann::json({0, 2, 4}));
        CHECK(report["wcss"].get<double>() == doctest::Approx(1.0));
    }
    SUBCASE("k=1 returns the weighted mean") {
        const std::string weighted =
            write_temp("cli_weighted.csv", "1,3\n3,1\n");
        const RunResult run = run_cli("cluster " + weighted + " --k 1 --weights");
        REQUIRE(run.exit_code == 0);
        const auto report = nlohmann::json::parse(run.output);
        CHECK(report["centroids"][0].get<double>() == doctest::Approx(1.5));
    }
    SUBCASE("same seed twice is byte-identical except timings") {
        const RunResult a = run_cli("cluster " + path + " --k 2 --seed 7");
        const RunResult b = run_cli("cluster " + path + " --k 2 --seed 7");
        REQUIRE(a.exit_code == 0);
        REQUIRE(b.exit_code == 0);
        CHECK(strip_timings(a.output).dump() == strip_timings(b.output).dump());
    }
    SUBCASE("assume-sorted accepts sorted data and rejects unsorted") {
        const RunResult ok = run_cli("cluster " + path + " --k 2 --assume-sorted");
        CHECK(ok.exit_code == 0);
        const std::string unsorted = write_temp("cli_unsorted.csv", "5\n1\n");
        const RunResult bad = run_cli("cluster " + unsorted + " --k 1 --assume-sorted");
        CHECK(bad.exit_code == 1);
    }
    SUBCASE("raw format") {
        const double values[4] = {0.0, 1.0, 9.0, 10.0};
        const std::string raw_path = "/tmp/cli_four_points.raw";
        std::ofstream out(raw_path, std::ios::binary);
        out.write(reinterpret_cast<const char*>(values), sizeof(values));
        out.close();
        const RunResult run =
            run_cli("cluster " + raw_path + " --k 2 --fast-two-cluster --format raw");
        REQUIRE(run.exit_code == 0);
        const auto report = nlohmann::json::parse(run.output);
        CHECK(report["borders"] == nlohmann::json({0, 2, 4}));
    }
    SUBCASE("exit codes") {
        CHECK(run_cli("cluster /tmp/kmeans1d_nonexistent.csv --k 2").exit_code == 2);
        CHECK(run_cli("cluster " + path + " --k 9").exit_code == 1);
        const std::string malformed = write_temp("cli_malformed.csv", "1\npotato\n");
        CHECK(run_cli("cluster " + malformed + " --k 1").exit_code == 1);
    }
}

TEST_CASE("verify subcommand") {
    SUBCASE("default suites pass") {
        const RunResult run = run_cli("verify --cases 40");
        CHECK(run.exit_code == 0);
        CHECK(run.output.find("all suites passed") != std::string::npos);
    }
    SUBCASE("two-cluster suite at higher volume") {
        const RunResult run = run_cli("verify --suite two-cluster --cases 500");
        CHECK(run.exit_code == 0);
        CHECK(run.output.find("500/500") != std::string::npos);
    }
    SUBCASE("corrupted tie rule is caught and reported") {
        const RunResult run =
            run_cli("verify --suite two-cluster --cases 200 --corrupt-tie-rule");
        CHECK(run.exit_code == 1);
        CHECK(run.output.find("failing seeds:") != std::string::npos);
    }
}

TEST_CASE("bench subcommand emits the stable CSV schema") {
    const RunResult run =
        run_cli("bench --grid 'n=4096,8192;k=2,4' --reps 3 --seed 11");
    REQUIRE(run.exit_code == 0);

    std::istringstream lines(run.output);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "method,n,k,seed,preprocess_ns,main_ns,wcss,iterations");

    std::size_t rows = 0;
    std::string line;
    while (std::getline(lines, line)) {
        if (!line.empty()) {
            ++rows;
        }
    }
    // 2 sizes x 2 ks x 2 default methods.
    CHECK(rows == 8);
}

TEST_CASE("quantize subcommand") {
    SUBCASE("seed 3 bits to target 8 bits") {
        const RunResult run = run_cli("quantize --seed-bits 3 --target-bits 8 --seed 5");
        REQUIRE(run.exit_code == 0);
        const auto report = nlohmann::json::parse(run.output);
        REQUIRE(report["levels"].size() == 6);
        double previous = std::numeric_limits<double>::infinity();
        for (const auto& level : report["levels"]) {
            const double wcss = level["wcss"].get<double>();
            CHECK(wcss <= previous + 1e-9 * std::max(1.0, previous));
            previous = wcss;
        }
        CHECK(report["codebook"]["centroids"].size() == 256);
    }
    SUBCASE("0 to 1 bits equals a single two-cluster call") {
        using namespace kmeans1d;
        const RunResult run =
            run_cli("quantize --seed-bits 0 --target-bits 1 --n 512 --seed 9");
        REQUIRE(run.exit_code == 0);
        const auto report = nlohmann::json::parse(run.output);

        const std::vector<double> channel = synthetic::normal_channel(512, 9);
        const SortedInput input = sort_and_align(channel);
        const PrefixSums prefix = build_prefix_sums(input);
        const Clustering expected = two_cluster(input, prefix, {0, 512});
        CHECK(report["codebook"]["centroids"][0].get<double>() ==
              doctest::Approx(expected.centroids[0]));
        CHECK(report["codebook"]["centroids"][1].get<double>() ==
              doctest::Approx(expected.centroids[1]));
        CHECK(report["codebook"]["borders"][1].get<std::size_t>() == expected.borders[1]);
    }
    SUBCASE("validation failures") {
        CHECK(run_cli("quantize --seed-bits 4 --target-bits 2").exit_code == 1);
        CHECK(run_cli("quantize --seed-bits 8 --target-bits 8 --n 10").exit_code == 1);
    }
}

TEST_CASE("repeated quantize runs are deterministic") {
    const RunResult a = run_cli("quantize --seed-bits 3 --target-bits 6 --n 2048 --seed 3");
    const RunResult b = run_cli("quantize --seed-bits 3 --target-bits 6 --n 2048 --seed 3");
    REQUIRE(a.exit_code == 0);
    REQUIRE(b.exit_code == 0);
    CHECK(strip_timings(a.output).dump() == strip_timings(b.output).dump());
}
