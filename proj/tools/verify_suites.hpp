#pragma once

// Randomized verification suites driven by the `verify` subcommand. Each
// suite replays the corresponding oracle equivalence over seeded random
// instances and reports the seeds of any counterexamples.

#include <cstdint>
#include <string>
#include <vector>

namespace cli {

struct SuiteReport {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::vector<std::uint64_t> failing_seeds;

    bool passed() const { return failures == 0; }
};

struct SuiteOptions {
    std::size_t cases = 0;          // 0 keeps the suite default
    std::uint64_t seed = 0;         // base seed
    bool corrupt_tie_rule = false;  // testing aid: breaks the fixed-point check
};

SuiteReport run_init_equivalence_suite(const SuiteOptions& options);
SuiteReport run_lloyd_equivalence_suite(const SuiteOptions& options);
SuiteReport run_two_cluster_suite(const SuiteOptions& options);
SuiteReport run_dp_bound_suite(const SuiteOptions& options);

} // namespace cli
