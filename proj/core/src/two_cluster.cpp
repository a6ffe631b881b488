#include "kmeans1d/two_cluster.hpp"

#include <algorithm>
#include <stdexcept>

namespace kmeans1d {

namespace {

// First index in [start, stop) whose cumulative weight reaches the range
// total, i.e. the position of the last strict increase of W.
std::size_t last_weight_increase(const PrefixSums& prefix, IndexRange range) {
    const double final_value = prefix.weight[range.stop - 1];
    const double* lo = prefix.weight.data() + range.start;
    const double* hi = prefix.weight.data() + range.stop;
    return static_cast<std::size_t>(
        std::lower_bound(lo, hi, final_value) - prefix.weight.data());
}

// Position of the first strict increase of W within the range.
std::size_t first_weight_increase(const PrefixSums& prefix, IndexRange range) {
    const double base = range.start == 0 ? 0.0 : prefix.weight[range.start - 1];
    const double* lo = prefix.weight.data() + range.start;
    const double* hi = prefix.weight.data() + range.stop;
    return static_cast<std::size_t>(
        std::upper_bound(lo, hi, base) - prefix.weight.data());
}

} // namespace

DivisionProbe classify_division(const SortedInput& input, const PrefixSums& prefix,
                                std::size_t division, IndexRange range) {
    if (division <= range.start || division >= range.stop) {
        throw std::invalid_argument("classify_division: division outside range");
    }
    const IndexRange left{range.start, division};
    const IndexRange right{division, range.stop};
    if (range_sum(prefix.weight, left) == 0.0 || range_sum(prefix.weight, right) == 0.0) {
        throw std::invalid_argument("zero-weight side");
    }

    DivisionProbe probe;
    probe.division = division;
    probe.left_centroid = range_centroid(prefix, input, left);
    probe.right_centroid = range_centroid(prefix, input, right);
    probe.midpoint = (probe.left_centroid + probe.right_centroid) / 2.0;
    if (probe.midpoint > input.values[division]) {
        probe.classification = Pointing::kRight;
    } else if (probe.midpoint < input.values[division - 1]) {
        probe.classification = Pointing::kLeft;
    } else {
        probe.classification = Pointing::kConvergent;
    }
    return probe;
}

TwoSplit two_cluster_split(const SortedInput& input, const PrefixSums& prefix,
                           IndexRange range, TwoClusterStats* stats) {
    if (range.empty() || range.stop > input.size()) {
        throw std::invalid_argument("two_cluster: empty range");
    }
    TwoClusterStats local_stats;
    TwoClusterStats& st = stats != nullptr ? *stats : local_stats;
    st = TwoClusterStats{};

    const std::size_t start = range.start;
    const std::size_t stop = range.stop;
    const std::size_t size = range.size();

    if (size == 1) {
        st.outcome = TwoClusterOutcome::kSizeOne;
        const double v = input.values[start];
        return {v, v, 0.0, start + 1};
    }
    if (size == 2) {
        st.outcome = TwoClusterOutcome::kSizeTwo;
        TwoSplit split{input.values[start], input.values[start + 1], 0.0, start + 1};
        split.wcss = range_wcss(prefix, split.left_centroid, {start, start + 1}) +
                     range_wcss(prefix, split.right_centroid, {start + 1, stop});
        return split;
    }

    const double* const weight = prefix.weight.data();
    const double* const weighted = prefix.weighted_value.data();
    const double weight_base = start == 0 ? 0.0 : weight[start - 1];
    const double weighted_base = start == 0 ? 0.0 : weighted[start - 1];
    const double weight_hi = weight[stop - 1];
    const double weighted_hi = weighted[stop - 1];

    const double total_weight = weight_hi - weight_base;
    if (total_weight == 0.0) {
        // Nothing carries weight: solve as unweighted data. The weighted
        // objective is identically zero, so the WCSS is reported as 0.
        SortedInput ones{input.values, std::vector<double>(input.size(), 1.0)};
        const PrefixSums ones_prefix = build_prefix_sums(ones);
        TwoSplit split = two_cluster_split(ones, ones_prefix, range, &st);
        st.unweighted_rerun = true;
        split.wcss = 0.0;
        return split;
    }

    // first_visible/last_visible bound the divisions with positive weight on
    // both sides. The common case (endpoints weighted, values not all equal)
    // resolves in O(1); otherwise two binary searches on W locate them and
    // the degenerate families are handled first:
    //   - a single index carrying the whole range weight collapses both
    //     centroids onto its value and keeps everything in the left cluster;
    //   - all positive weight on one shared value makes every division
    //     WCSS-optimal at 0, and the midpoint classification carries no
    //     signal, so both centroids take the shared value and the division
    //     falls after the last weighted point, clamped interior.
    std::size_t first_visible = start;
    std::size_t last_visible = stop - 1;
    const bool plain_range = weight[start] > weight_base &&
                             weight_hi > weight[stop - 2] &&
                             input.values[start] != input.values[stop - 1];
    if (!plain_range) {
        last_visible = last_weight_increase(prefix, range);
        first_visible = first_weight_increase(prefix, range);
        if (first_visible == last_visible) {
            st.outcome = TwoClusterOutcome::kSingleWeight;
            const double v = input.values[first_visible];
            return {v, v, 0.0, stop};
        }
        if (input.values[first_visible] == input.values[last_visible]) {
            st.outcome = TwoClusterOutcome::kSingleValueMass;
            const double v = input.values[first_visible];
            return {v, v, 0.0, std::clamp(last_visible + 1, start + 1, stop - 1)};
        }
    }

    // Binary search over division candidates. Divisions with a weightless
    // side (outside (first_visible, last_visible]) only shrink the scope;
    // probed candidates steer it by their pointing. The probe arithmetic is
    // kept expression-identical to range_centroid so convergent outputs
    // reproduce bit for bit under a Lloyd step.
    std::size_t floor = start + 1;
    std::size_t ceiling = stop - 1;
    bool convergent = false;
    TwoSplit split;

    while (floor < ceiling) {
        const std::size_t candidate = floor + (ceiling - floor) / 2;
        if (candidate <= first_visible) {  // left side carries no weight
            floor = candidate + 1;
            continue;
        }
        if (candidate > last_visible) {    // right side carries no weight
            ceiling = candidate - 1;
            continue;
        }
        const double left_centroid =
            (weighted[candidate - 1] - weighted_base) / (weight[candidate - 1] - weight_base);
        const double right_centroid =
            (weighted_hi - weighted[candidate - 1]) / (weight_hi - weight[candidate - 1]);
        const double midpoint = (left_centroid + right_centroid) / 2.0;
        ++st.probes;
        if (midpoint > input.values[candidate]) {
            floor = candidate + 1;
        } else if (midpoint < input.values[candidate - 1]) {
            ceiling = candidate - 1;
        } else {
            convergent = true;
            split.division = candidate;
            split.left_centroid = left_centroid;
            split.right_centroid = right_centroid;
            break;
        }
    }

    if (!convergent) {
        // Scope exhausted: take its midpoint, clamped to keep both clusters
        // non-empty, and derive the centroids for that division.
        st.outcome = TwoClusterOutcome::kScopeCollapse;
        split.division = std::clamp((floor + ceiling) / 2, start + 1, stop - 1);
        split.left_centroid = range_centroid(prefix, input, {start, split.division});
        split.right_centroid = range_centroid(prefix, input, {split.division, stop});
    } else {
        st.outcome = TwoClusterOutcome::kConvergent;
    }

    split.wcss = range_wcss(prefix, split.left_centroid, {start, split.division}) +
                 range_wcss(prefix, split.right_centroid, {split.division, stop});
    return split;
}

Clustering two_cluster(const SortedInput& input, const PrefixSums& prefix,
                       IndexRange range, TwoClusterStats* stats) {
    const TwoSplit split = two_cluster_split(input, prefix, range, stats);
    Clustering out;
    out.centroids = {split.left_centroid, split.right_centroid};
    out.borders = {range.start, split.division, range.stop};
    out.wcss = split.wcss;
    return out;
}

} // namespace kmeans1d
