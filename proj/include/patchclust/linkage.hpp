#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "patchclust/merge_tree.hpp"
#include "patchclust/slice.hpp"

namespace patchclust {

// Partition of a tree's rows obtained by undoing the last min(k, N) - 1
// merges. Clusters are listed left to right; each is a contiguous run of the
// sorted coordinates, with member source rows in coordinate order.
struct Cut {
    std::size_t k = 0;
    std::vector<std::vector<std::size_t>> clusters;
};

// Exact single-linkage clustering of a 1D signal. Sorts the input, then
// processes the N-1 consecutive gaps in ascending order with a union-find
// over adjacent runs; adjacency makes the generic O(N^2) algorithm
// unnecessary. Equal gaps are processed left to right in sorted order, and
// duplicate coordinates merge at height 0 without deduplication.
// Throws std::invalid_argument on non-finite input.
MergeTree single_linkage_1d(std::span<const double> x);

// Same clustering over a slice's signal, with leaf back-references pointing
// at the slice's dataset rows so downstream reports map into the full table.
MergeTree single_linkage_1d(const Slice1D& slice);

// Independent O(N^3) oracle: repeatedly merges the pair of clusters with the
// smallest minimum pairwise distance, ties broken toward the leftmost pair in
// sorted order. Produces a tree identical to single_linkage_1d under the
// shared tie-break rule. Throws when the input exceeds `limit`.
MergeTree single_linkage_naive(std::span<const double> x, std::size_t limit = 512);

// k >= 1; k > N clamps to all singletons.
Cut cut(const MergeTree& tree, std::size_t k);

}  // namespace patchclust
