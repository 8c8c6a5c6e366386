#include "patchclust/linkage.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace patchclust {

namespace {

std::vector<MergeTree::Leaf> sorted_leaves(std::span<const double> x) {
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!std::isfinite(x[i]))
            throw std::invalid_argument("non-finite coordinate at index " + std::to_string(i));

    std::vector<MergeTree::Leaf> leaves(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) leaves[i] = {x[i], i};
    std::sort(leaves.begin(), leaves.end(), [](const auto& a, const auto& b) {
        if (a.coord != b.coord) return a.coord < b.coord;
        return a.source_row < b.source_row;
    });
    return leaves;
}

}  // namespace

MergeTree single_linkage_1d(std::span<const double> x) {
    MergeTree tree;
    tree.leaves = sorted_leaves(x);
    const std::size_t n = tree.leaves.size();
    if (n < 2) return tree;

    // Gap i separates sorted positions i and i+1. A stable sort keeps equal
    // gaps in left-to-right order.
    std::vector<std::size_t> order(n - 1);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const double ga = tree.leaves[a + 1].coord - tree.leaves[a].coord;
        const double gb = tree.leaves[b + 1].coord - tree.leaves[b].coord;
        return ga < gb;
    });

    // Union-find over sorted positions; each run remembers its current node id.
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    std::vector<std::size_t> node_of(n);
    std::iota(node_of.begin(), node_of.end(), std::size_t{0});

    auto find = [&](std::size_t a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    };

    tree.merges.reserve(n - 1);
    for (std::size_t gap : order) {
        const std::size_t ra = find(gap);
        const std::size_t rb = find(gap + 1);
        const double height = tree.leaves[gap + 1].coord - tree.leaves[gap].coord;
        tree.merges.push_back({node_of[ra], node_of[rb], height});
        parent[rb] = ra;
        node_of[ra] = n + tree.merges.size() - 1;
    }
    return tree;
}

MergeTree single_linkage_1d(const Slice1D& slice) {
    MergeTree tree = single_linkage_1d(std::span<const double>(slice.coords));
    // leaves currently reference positions within the slice
    for (auto& leaf : tree.leaves) leaf.source_row = slice.source_rows[leaf.source_row];
    return tree;
}

MergeTree single_linkage_naive(std::span<const double> x, std::size_t limit) {
    if (x.size() > limit)
        throw std::invalid_argument("naive oracle limited to " + std::to_string(limit) +
                                    " points, got " + std::to_string(x.size()));

    MergeTree tree;
    tree.leaves = sorted_leaves(x);
    const std::size_t n = tree.leaves.size();
    if (n < 2) return tree;

    // Active clusters ordered by leftmost sorted position.
    struct Cluster {
        std::size_t node;
        std::vector<std::size_t> positions;
    };
    std::vector<Cluster> clusters(n);
    for (std::size_t i = 0; i < n; ++i) clusters[i] = {i, {i}};

    auto min_pair_distance = [&](const Cluster& a, const Cluster& b) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t pa : a.positions)
            for (std::size_t pb : b.positions)
                best = std::min(best, std::abs(tree.leaves[pa].coord - tree.leaves[pb].coord));
        return best;
    };

    tree.merges.reserve(n - 1);
    while (clusters.size() > 1) {
        std::size_t bi = 0, bj = 1;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < clusters.size(); ++i)
            for (std::size_t j = i + 1; j < clusters.size(); ++j) {
                const double d = min_pair_distance(clusters[i], clusters[j]);
                if (d < best) {
                    best = d;
                    bi = i;
                    bj = j;
                }
            }

        tree.merges.push_back({clusters[bi].node, clusters[bj].node, best});
        clusters[bi].node = n + tree.merges.size() - 1;
        clusters[bi].positions.insert(clusters[bi].positions.end(),
                                      clusters[bj].positions.begin(),
                                      clusters[bj].positions.end());
        clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(bj));
    }
    return tree;
}

Cut cut(const MergeTree& tree, std::size_t k) {
    if (k < 1) throw std::invalid_argument("cut requires k >= 1");
    const std::size_t n = tree.leaf_count();
    Cut result;
    result.k = k;
    if (n == 0) return result;

    const std::size_t kk = std::min(k, n);
    const std::size_t applied = n - kk;

    const auto spans = tree.node_spans();
    std::vector<bool> alive(tree.node_count(), false);
    for (std::size_t i = 0; i < n; ++i) alive[i] = true;
    for (std::size_t m = 0; m < applied; ++m) {
        alive[tree.merges[m].left] = false;
        alive[tree.merges[m].right] = false;
        alive[n + m] = true;
    }

    std::vector<std::size_t> roots;
    for (std::size_t v = 0; v < n + applied; ++v)
        if (alive[v]) roots.push_back(v);
    std::sort(roots.begin(), roots.end(),
              [&](std::size_t a, std::size_t b) { return spans[a].first < spans[b].first; });

    result.clusters.reserve(roots.size());
    for (std::size_t v : roots)
        result.clusters.push_back(tree.rows_in_span(spans[v].first, spans[v].second));
    return result;
}

}  // namespace patchclust
