#include "kmeans1d/synthetic.hpp"

#include <random>

namespace kmeans1d::synthetic {

namespace {

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace

std::vector<double> uniform_values(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<double> out(n);
    for (double& v : out) {
        v = uniform01(rng);
    }
    return out;
}

std::vector<double> blob_values(std::size_t n, std::size_t components,
                                std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<double> centers(components == 0 ? 1 : components);
    for (double& c : centers) {
        c = -10.0 + 20.0 * uniform01(rng);
    }
    std::normal_distribution<double> noise(0.0, 1.0);
    std::vector<double> out(n);
    for (double& v : out) {
        const std::size_t c = static_cast<std::size_t>(rng() % centers.size());
        v = centers[c] + noise(rng);
    }
    return out;
}

std::vector<double> normal_channel(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<double> out(n);
    for (double& v : out) {
        v = normal(rng);
    }
    return out;
}

std::vector<double> ones_weights(std::size_t n) {
    return std::vector<double>(n, 1.0);
}

std::vector<double> positive_weights(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<double> out(n);
    for (double& w : out) {
        w = 0.01 + uniform01(rng);
    }
    return out;
}

std::vector<double> sparse_weights(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<double> out(n);
    for (double& w : out) {
        w = uniform01(rng) < 0.4 ? 0.0 : uniform01(rng);
    }
    return out;
}

std::vector<double> single_nonzero_weights(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<double> out(n, 0.0);
    out[rng() % n] = 0.5 + uniform01(rng);
    return out;
}

} // namespace kmeans1d::synthetic
