#include "patchclust/relevance.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace patchclust {

PrunedTree prune_and_contract(const MergeTree& tree, double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");

    const std::size_t n_leaves = tree.leaf_count();
    PrunedTree pruned;
    pruned.threshold = static_cast<double>(n_leaves) / alpha;
    pruned.root_height = tree.root_height();
    if (n_leaves == 0) return pruned;

    const std::size_t total = tree.node_count();
    const auto counts = tree.node_leaf_counts();
    const auto spans = tree.node_spans();

    std::vector<bool> qualifies(total);
    for (std::size_t v = 0; v < total; ++v)
        qualifies[v] = static_cast<double>(counts[v]) >= pruned.threshold;

    constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> parent(total, kNone);
    std::vector<double> height(total, 0.0);
    for (std::size_t k = 0; k < tree.merges.size(); ++k) {
        const auto& m = tree.merges[k];
        parent[m.left] = n_leaves + k;
        parent[m.right] = n_leaves + k;
        height[n_leaves + k] = m.height;
    }

    auto sibling = [&](std::size_t v) {
        const auto& m = tree.merges[parent[v] - n_leaves];
        return m.left == v ? m.right : m.left;
    };

    // Bases are qualifying nodes with no qualifying child; each base grows a
    // chain upward while the sibling at each step stays sub-threshold.
    for (std::size_t v = 0; v < total; ++v) {
        if (!qualifies[v]) continue;
        if (!tree.is_leaf(v)) {
            const auto& m = tree.merges[v - n_leaves];
            if (qualifies[m.left] || qualifies[m.right]) continue;
        }

        LeafBranch branch;
        branch.formation_height = tree.is_leaf(v) ? 0.0 : height[v];

        std::size_t top = v;
        while (parent[top] != kNone && !qualifies[sibling(top)]) top = parent[top];
        branch.split_height = parent[top] != kNone ? height[parent[top]] : pruned.root_height;
        branch.member_rows = tree.rows_in_span(spans[top].first, spans[top].second);
        pruned.branches.push_back(std::move(branch));
    }

    // Bases are discovered in node-id order; reorder chains left to right by
    // sorted position. Member rows are emitted in coordinate order, so each
    // branch's first member decides.
    std::unordered_map<std::size_t, std::size_t> position_of;
    position_of.reserve(n_leaves);
    for (std::size_t p = 0; p < n_leaves; ++p) position_of[tree.leaves[p].source_row] = p;
    std::sort(pruned.branches.begin(), pruned.branches.end(),
              [&](const LeafBranch& a, const LeafBranch& b) {
                  return position_of[a.member_rows.front()] < position_of[b.member_rows.front()];
              });

    return pruned;
}

RelevanceReport relevance(const MergeTree& tree, double alpha) {
    RelevanceReport report;
    report.H = tree.root_height();

    if (tree.leaf_count() < 2) {
        report.degenerate = true;
        return report;
    }

    PrunedTree pruned = prune_and_contract(tree, alpha);
    report.branches = std::move(pruned.branches);
    // stable: equal-length branches keep their left-to-right order
    std::stable_sort(report.branches.begin(), report.branches.end(),
                     [](const LeafBranch& a, const LeafBranch& b) { return a.length() > b.length(); });

    if (report.H <= 0.0) {
        // All points identical: no height axis to measure against.
        report.degenerate = true;
        return report;
    }

    report.occurred = report.branches.size() >= 2;
    if (report.occurred) report.rho = report.branches[1].length() / report.H;
    return report;
}

std::vector<Interstice> find_interstices(const Slice1D& slice, const RelevanceReport& report) {
    if (!report.occurred)
        throw std::invalid_argument("find_interstices requires an occurred relevance report");

    std::unordered_map<std::size_t, double> coord_of;
    coord_of.reserve(slice.size());
    for (std::size_t i = 0; i < slice.size(); ++i) coord_of[slice.source_rows[i]] = slice.coords[i];

    struct Range {
        double lo, hi;
        const LeafBranch* branch;
    };
    std::vector<Range> ranges;
    ranges.reserve(report.branches.size());
    for (const auto& branch : report.branches) {
        double lo = std::numeric_limits<double>::infinity();
        double hi = -std::numeric_limits<double>::infinity();
        for (std::size_t row : branch.member_rows) {
            const auto it = coord_of.find(row);
            if (it == coord_of.end())
                throw std::invalid_argument("relevance report does not match slice: row " +
                                            std::to_string(row) + " absent");
            lo = std::min(lo, it->second);
            hi = std::max(hi, it->second);
        }
        ranges.push_back({lo, hi, &branch});
    }
    std::sort(ranges.begin(), ranges.end(),
              [](const Range& a, const Range& b) { return a.lo < b.lo; });

    std::vector<Interstice> out;
    out.reserve(ranges.size() - 1);
    for (std::size_t i = 0; i + 1 < ranges.size(); ++i) {
        Interstice gap;
        gap.xa = ranges[i].hi;
        gap.xb = ranges[i + 1].lo;
        gap.left_rows = ranges[i].branch->member_rows;
        gap.right_rows = ranges[i + 1].branch->member_rows;
        out.push_back(std::move(gap));
    }
    return out;
}

}  // namespace patchclust
