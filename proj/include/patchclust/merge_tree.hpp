#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace patchclust {

// Single-linkage dendrogram of a one-dimensional signal.
//
// Leaves are stored in sorted coordinate order (ties broken by source row).
// Node ids follow the export convention: nodes 0..N-1 are leaves in that
// order, node N+k is the k-th merge. Merge heights are non-decreasing, and in
// one dimension every node covers a contiguous run of sorted positions.
struct MergeTree {
    struct Leaf {
        double coord;
        std::size_t source_row;
    };
    struct Merge {
        std::size_t left;
        std::size_t right;
        double height;
    };

    std::vector<Leaf> leaves;
    std::vector<Merge> merges;

    std::size_t leaf_count() const { return leaves.size(); }
    std::size_t node_count() const { return leaves.size() + merges.size(); }
    bool is_leaf(std::size_t node) const { return node < leaves.size(); }

    // Height of the final merge; 0 for trees with fewer than two leaves.
    double root_height() const { return merges.empty() ? 0.0 : merges.back().height; }

    // Inclusive [lo, hi] span of sorted leaf positions under each node.
    std::vector<std::pair<std::size_t, std::size_t>> node_spans() const;

    // Number of leaves under each node.
    std::vector<std::size_t> node_leaf_counts() const;

    // Source rows of the leaves in positions [lo, hi], in coordinate order.
    std::vector<std::size_t> rows_in_span(std::size_t lo, std::size_t hi) const;
};

// Structural equality: same leaves (coords and source rows) and identical
// merge lists.
bool trees_equal(const MergeTree& a, const MergeTree& b);

// Throws std::logic_error if the tree violates a dendrogram invariant:
// merge count != max(N-1, 0), decreasing heights, a child out of range or
// referenced by more than one later merge, or a non-root node never merged.
void check_merge_tree(const MergeTree& tree);

}  // namespace patchclust
