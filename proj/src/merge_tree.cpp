#include "patchclust/merge_tree.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace patchclust {

std::vector<std::pair<std::size_t, std::size_t>> MergeTree::node_spans() const {
    std::vector<std::pair<std::size_t, std::size_t>> spans(node_count());
    for (std::size_t i = 0; i < leaves.size(); ++i) spans[i] = {i, i};
    for (std::size_t k = 0; k < merges.size(); ++k) {
        const auto& m = merges[k];
        const auto& l = spans[m.left];
        const auto& r = spans[m.right];
        spans[leaves.size() + k] = {std::min(l.first, r.first), std::max(l.second, r.second)};
    }
    return spans;
}

std::vector<std::size_t> MergeTree::node_leaf_counts() const {
    std::vector<std::size_t> counts(node_count(), 0);
    for (std::size_t i = 0; i < leaves.size(); ++i) counts[i] = 1;
    for (std::size_t k = 0; k < merges.size(); ++k)
        counts[leaves.size() + k] = counts[merges[k].left] + counts[merges[k].right];
    return counts;
}

std::vector<std::size_t> MergeTree::rows_in_span(std::size_t lo, std::size_t hi) const {
    std::vector<std::size_t> rows;
    rows.reserve(hi - lo + 1);
    for (std::size_t p = lo; p <= hi; ++p) rows.push_back(leaves[p].source_row);
    return rows;
}

bool trees_equal(const MergeTree& a, const MergeTree& b) {
    if (a.leaves.size() != b.leaves.size() || a.merges.size() != b.merges.size()) return false;
    for (std::size_t i = 0; i < a.leaves.size(); ++i)
        if (a.leaves[i].coord != b.leaves[i].coord ||
            a.leaves[i].source_row != b.leaves[i].source_row)
            return false;
    for (std::size_t k = 0; k < a.merges.size(); ++k)
        if (a.merges[k].left != b.merges[k].left || a.merges[k].right != b.merges[k].right ||
            a.merges[k].height != b.merges[k].height)
            return false;
    return true;
}

void check_merge_tree(const MergeTree& tree) {
    const std::size_t n = tree.leaf_count();
    const std::size_t expected = n == 0 ? 0 : n - 1;
    if (tree.merges.size() != expected)
        throw std::logic_error("merge tree has " + std::to_string(tree.merges.size()) +
                               " merges for " + std::to_string(n) + " leaves");

    std::vector<bool> used(tree.node_count(), false);
    double prev = 0.0;
    for (std::size_t k = 0; k < tree.merges.size(); ++k) {
        const auto& m = tree.merges[k];
        if (!std::isfinite(m.height) || m.height < 0.0)
            throw std::logic_error("merge " + std::to_string(k) + " has invalid height");
        if (m.height < prev)
            throw std::logic_error("merge heights decrease at merge " + std::to_string(k));
        prev = m.height;
        const std::size_t limit = n + k;
        for (std::size_t child : {m.left, m.right}) {
            if (child >= limit)
                throw std::logic_error("merge " + std::to_string(k) +
                                       " references node not yet created");
            if (used[child])
                throw std::logic_error("node " + std::to_string(child) +
                                       " is a child of two merges");
            used[child] = true;
        }
    }
    // Every node except the final root must have been consumed by a merge.
    if (tree.node_count() > 0)
        for (std::size_t v = 0; v + 1 < tree.node_count(); ++v)
            if (!used[v])
                throw std::logic_error("node " + std::to_string(v) + " never merged");
}

}  // namespace patchclust
