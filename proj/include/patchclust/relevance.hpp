#pragma once

#include <cstddef>
#include <vector>

#include "patchclust/merge_tree.hpp"
#include "patchclust/slice.hpp"

namespace patchclust {

// A surviving branch of the streak-pruned dendrogram: the maximal chain of
// nodes with at least n leaves whose only qualifying child is unique.
//
// formation_height is the height of the merge creating the chain's lowest
// qualifying node (0 when that node is a single point, possible only for
// n <= 1). split_height is the height of the first merge joining the chain
// to another qualifying subtree, or the root height for the topmost chain.
// member_rows holds every row under the top of the chain, in coordinate
// order, including streak points absorbed between formation and split.
struct LeafBranch {
    std::vector<std::size_t> member_rows;
    double formation_height = 0.0;
    double split_height = 0.0;

    double length() const { return split_height - formation_height; }
};

struct PrunedTree {
    double threshold = 0.0;    // n = N / alpha, kept as a real
    double root_height = 0.0;  // H
    std::vector<LeafBranch> branches;  // left-to-right in coordinate order
};

// Removes sub-threshold (streak) subtrees and contracts streak-absorption
// chains. A node qualifies iff its leaf count >= n = N/alpha; qualifying
// nodes whose children both fail the threshold start a chain, and the chain
// extends upward while the sibling at each step stays below threshold.
// Throws std::invalid_argument for alpha <= 0.
PrunedTree prune_and_contract(const MergeTree& tree, double alpha);

// Relevance of clustering in a 1D signal: rho = (length of the second
// longest pruned leaf branch) / H, in [0, 1]. occurred means at least two
// qualifying leaf branches were found. Signals whose merges all happen at
// height 0 (H = 0), or with fewer than two leaves, are flagged degenerate
// and report rho = 0.
struct RelevanceReport {
    double rho = 0.0;
    double H = 0.0;
    bool occurred = false;
    bool degenerate = false;
    std::vector<LeafBranch> branches;  // sorted by length, longest first
};

RelevanceReport relevance(const MergeTree& tree, double alpha);

// Separation interval between two adjacent qualifying clusters: xa is the
// largest coordinate of the left cluster, xb the smallest coordinate of the
// right one. Streak points absorbed above a split may fall inside (xa, xb).
struct Interstice {
    double xa = 0.0;
    double xb = 0.0;
    std::vector<std::size_t> left_rows;
    std::vector<std::size_t> right_rows;
};

// One interstice per adjacent pair of qualifying leaf branches, ordered left
// to right along the slice coordinate. Requires report.occurred; the report
// must come from a tree built over this slice.
std::vector<Interstice> find_interstices(const Slice1D& slice, const RelevanceReport& report);

}  // namespace patchclust
