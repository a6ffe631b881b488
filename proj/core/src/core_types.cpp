#include "kmeans1d/core_types.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace kmeans1d {

namespace {

void validate_elements(std::span<const double> values, std::span<const double> weights) {
    if (values.empty()) {
        throw std::invalid_argument("empty dataset");
    }
    if (!weights.empty() && weights.size() != values.size()) {
        throw std::invalid_argument("invalid element: weights length mismatch");
    }
    for (double v : values) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("invalid element: non-finite value");
        }
    }
    for (double w : weights) {
        if (!std::isfinite(w) || w < 0.0) {
            throw std::invalid_argument("invalid element: bad weight");
        }
    }
}

} // namespace

SortedInput sort_and_align(std::span<const double> values,
                           std::span<const double> weights) {
    return sort_and_align_tracked(values, weights).input;
}

TrackedInput sort_and_align_tracked(std::span<const double> values,
                                    std::span<const double> weights) {
    validate_elements(values, weights);
    const std::size_t n = values.size();

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    // Stable so that equal values keep their weight alignment deterministic.
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

    TrackedInput out;
    out.input.values.resize(n);
    out.input.weights.resize(n);
    out.sorted_position.resize(n);
    for (std::size_t pos = 0; pos < n; ++pos) {
        const std::size_t src = order[pos];
        out.input.values[pos] = values[src];
        out.input.weights[pos] = weights.empty() ? 1.0 : weights[src];
        out.sorted_position[src] = pos;
    }
    return out;
}

PrefixSums build_prefix_sums(const SortedInput& input) {
    const std::size_t n = input.size();
    PrefixSums prefix;
    prefix.weight.resize(n);
    prefix.weighted_value.resize(n);
    prefix.weighted_square.resize(n);

    double w_acc = 0.0;
    double wx_acc = 0.0;
    double wxx_acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double w = input.weights[i];
        const double x = input.values[i];
        w_acc += w;
        wx_acc += w * x;
        wxx_acc += w * x * x;
        prefix.weight[i] = w_acc;
        prefix.weighted_value[i] = wx_acc;
        prefix.weighted_square[i] = wxx_acc;
    }
    return prefix;
}

} // namespace kmeans1d
