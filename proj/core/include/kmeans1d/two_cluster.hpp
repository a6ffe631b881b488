#pragma once

#include <cstddef>

#include "kmeans1d/core_types.hpp"
#include "kmeans1d/partition.hpp"

namespace kmeans1d {

// How a division interval relates to the midpoint of its two side centroids.
enum class Pointing {
    kRight,       // midpoint > values[division]: boundary lies further right
    kLeft,        // midpoint < values[division-1]: boundary lies further left
    kConvergent,  // values[division-1] <= midpoint <= values[division]
};

// One probed division: left cluster [range.start, division), right cluster
// [division, range.stop), with both side centroids and the classification.
struct DivisionProbe {
    std::size_t division = 0;
    double left_centroid = 0.0;
    double right_centroid = 0.0;
    double midpoint = 0.0;
    Pointing classification = Pointing::kConvergent;
};

// Classifies a division in O(1) from the prefix sums. Requires
// range.start < division < range.stop and positive weight on both sides;
// throws std::invalid_argument("zero-weight side") otherwise.
DivisionProbe classify_division(const SortedInput& input, const PrefixSums& prefix,
                                std::size_t division, IndexRange range);

// Which path produced a two_cluster result. Everything except kConvergent is
// a documented degenerate output; see two_cluster below.
enum class TwoClusterOutcome {
    kConvergent,       // binary search stopped at a convergent division
    kScopeCollapse,    // search scope emptied; division recomputed from floor/ceiling
    kSizeOne,
    kSizeTwo,
    kSingleWeight,     // exactly one index carries all the weight
    kSingleValueMass,  // all positive weight shares one value
};

struct TwoClusterStats {
    std::size_t probes = 0;                  // classify_division calls
    TwoClusterOutcome outcome = TwoClusterOutcome::kConvergent;
    bool unweighted_rerun = false;           // zero total weight: solved with all-ones weights
};

// O(log n) two-cluster solver: binary search over division intervals using
// the midpoint classification above. Probing the center division moves the
// scope floor past right-pointing and zero-left-weight divisions and the
// ceiling below left-pointing and zero-right-weight ones, stopping at a
// convergent division. If the scope collapses first, the division is
// recomputed as the clamped scope midpoint and both centroids re-derived.
//
// Degenerate inputs short-circuit before the search:
//   size 1             -> both centroids equal the point, division = start + 1
//   size 2             -> centroids are the two points, division = start + 1
//   zero weight        -> re-solved against all-ones prefix sums; WCSS reported 0
//   single nonzero     -> both centroids equal that value, division = stop
//   single-value mass  -> all positive weight shares one value: both centroids
//                         take it (WCSS exactly 0) and the division falls after
//                         the last weighted point, clamped interior. Covers
//                         constant data; the midpoint classification carries no
//                         signal on such ranges.
//
// Non-degenerate convergent outputs whose midpoint exceeds values[division-1]
// are exact Lloyd fixed points: one assignment + update step reproduces the
// returned borders and centroids bit for bit. A convergent division whose
// midpoint equals values[division-1] exactly (possible with duplicated or
// constant values) is WCSS-equivalent to that fixed point but re-assigns the
// boundary-tied points rightward; it is documented degenerate alongside the
// short-circuit outputs and scope collapses.
//
// Throws std::invalid_argument on an empty range.
Clustering two_cluster(const SortedInput& input, const PrefixSums& prefix,
                       IndexRange range, TwoClusterStats* stats = nullptr);

// Allocation-free core of two_cluster, for hot paths that split many ranges
// (the quantizer's upscale runs one call per parent cluster).
struct TwoSplit {
    double left_centroid = 0.0;
    double right_centroid = 0.0;
    double wcss = 0.0;
    std::size_t division = 0;
};

TwoSplit two_cluster_split(const SortedInput& input, const PrefixSums& prefix,
                           IndexRange range, TwoClusterStats* stats = nullptr);

} // namespace kmeans1d
