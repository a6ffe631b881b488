#pragma once

#include <cstdint>
#include <vector>

// Synthetic data families used by the benchmark harness, the verify command
// and the test suites.
namespace kmeans1d::synthetic {

// n uniform reals in [0, 1).
std::vector<double> uniform_values(std::size_t n, std::uint64_t seed);

// 1D mixture of `components` Gaussians: centers uniform in [-10, 10],
// unit standard deviation.
std::vector<double> blob_values(std::size_t n, std::size_t components,
                                std::uint64_t seed);

// Standard-normal channel, stand-in for a model weight channel.
std::vector<double> normal_channel(std::size_t n, std::uint64_t seed);

// Weight regimes for randomized suites.
std::vector<double> ones_weights(std::size_t n);
std::vector<double> positive_weights(std::size_t n, std::uint64_t seed);           // uniform in (0.01, 1.01)
std::vector<double> sparse_weights(std::size_t n, std::uint64_t seed);             // ~40% exact zeros
std::vector<double> single_nonzero_weights(std::size_t n, std::uint64_t seed);     // one positive entry

} // namespace kmeans1d::synthetic
