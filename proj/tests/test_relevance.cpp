#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "patchclust/linkage.hpp"
#include "patchclust/relevance.hpp"
#include "patchclust/rng.hpp"
#include "patchclust/synth.hpp"
#include "test_helpers.hpp"

using namespace patchclust;

namespace {

Slice1D slice_of(const std::vector<double>& xs) {
    // a 1D signal seen as its own slice: rows are input positions
    std::vector<std::size_t> rows(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) rows[i] = i;
    std::sort(rows.begin(), rows.end(), [&](std::size_t a, std::size_t b) {
        if (xs[a] != xs[b]) return xs[a] < xs[b];
        return a < b;
    });
    Slice1D s;
    s.source_rows = rows;
    for (std::size_t r : rows) s.coords.push_back(xs[r]);
    return s;
}

// Count of dendrogram nodes holding at least N/alpha leaves.
std::size_t qualifying_nodes(const MergeTree& tree, double alpha) {
    const double n = static_cast<double>(tree.leaf_count()) / alpha;
    std::size_t count = 0;
    for (std::size_t c : tree.node_leaf_counts())
        if (static_cast<double>(c) >= n) ++count;
    return count;
}

}  // namespace

TEST_CASE("two tight triples: prune finds two branches with the hand-derived heights") {
    const std::vector<double> xs{0.0, 0.01, 0.02, 0.5, 0.51, 0.52};
    const MergeTree tree = single_linkage_1d(xs);
    const PrunedTree pruned = prune_and_contract(tree, 4.0);  // n = 1.5

    REQUIRE(pruned.branches.size() == 2);
    CHECK(pruned.threshold == 1.5);
    for (const auto& branch : pruned.branches) {
        CHECK(branch.formation_height == doctest::Approx(0.01).epsilon(1e-9));
        CHECK(branch.split_height == doctest::Approx(0.48).epsilon(1e-9));
    }
    CHECK(pruned.branches[0].member_rows == std::vector<std::size_t>{0, 1, 2});
    CHECK(pruned.branches[1].member_rows == std::vector<std::size_t>{3, 4, 5});
}

TEST_CASE("two tight triples: rho is 0.47/0.48") {
    const MergeTree tree = single_linkage_1d(std::vector<double>{0.0, 0.01, 0.02, 0.5, 0.51, 0.52});
    const RelevanceReport report = relevance(tree, 4.0);
    CHECK(report.occurred);
    CHECK_FALSE(report.degenerate);
    CHECK(report.rho == doctest::Approx(0.47 / 0.48).epsilon(1e-9));
    CHECK(report.H == doctest::Approx(0.48).epsilon(1e-12));
}

TEST_CASE("chain-only signal keeps a single leaf branch") {
    // geometric gaps: every merge absorbs one more point into the same run,
    // so no split ever has two qualifying sides
    std::vector<double> xs{0.0};
    double gap = 1.0;
    for (int i = 0; i < 7; ++i) {
        xs.push_back(xs.back() + gap);
        gap *= 2.0;
    }
    const MergeTree tree = single_linkage_1d(xs);
    const PrunedTree pruned = prune_and_contract(tree, 4.0);  // n = 2
    REQUIRE(pruned.branches.size() == 1);
    CHECK(pruned.branches[0].member_rows.size() == xs.size());
    CHECK(pruned.branches[0].split_height == tree.root_height());

    const RelevanceReport report = relevance(tree, 4.0);
    CHECK_FALSE(report.occurred);
    CHECK(report.rho == 0.0);
}

TEST_CASE("degenerate threshold n <= 1: singletons below the first merges") {
    const MergeTree tree = single_linkage_1d(std::vector<double>{0.0, 1.0, 3.0});
    const PrunedTree pruned = prune_and_contract(tree, 3.0);  // n = 1
    REQUIRE(pruned.branches.size() == 3);
    for (const auto& branch : pruned.branches) {
        CHECK(branch.member_rows.size() == 1);
        CHECK(branch.formation_height == 0.0);
    }
    CHECK(pruned.branches[0].split_height == 1.0);
    CHECK(pruned.branches[1].split_height == 1.0);
    CHECK(pruned.branches[2].split_height == 2.0);

    const RelevanceReport report = relevance(tree, 3.0);
    CHECK(report.occurred);
    CHECK(report.rho == doctest::Approx(0.5));  // second-longest 1 over H = 2
}

TEST_CASE("alpha must be positive") {
    const MergeTree tree = single_linkage_1d(std::vector<double>{0.0, 1.0});
    CHECK_THROWS_AS(prune_and_contract(tree, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(prune_and_contract(tree, -1.0), std::invalid_argument);
}

TEST_CASE("identical points are degenerate: H = 0, rho = 0") {
    const MergeTree tree = single_linkage_1d(std::vector<double>{2.0, 2.0, 2.0, 2.0});
    const RelevanceReport report = relevance(tree, 2.0);
    CHECK(report.degenerate);
    CHECK_FALSE(report.occurred);
    CHECK(report.rho == 0.0);
    CHECK(report.H == 0.0);
}

TEST_CASE("fewer than two leaves is degenerate, not an error") {
    CHECK(relevance(single_linkage_1d(std::vector<double>{}), 4.0).degenerate);
    CHECK(relevance(single_linkage_1d(std::vector<double>{1.0}), 4.0).degenerate);
}

TEST_CASE("rho stays in [0,1] and is invariant to translation and positive scaling") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto xs = testing_support::random_instance(seed * 31 + 5, 120);
        const double alpha = 2.0 + static_cast<double>(seed % 5);
        const RelevanceReport base = relevance(single_linkage_1d(xs), alpha);
        REQUIRE(base.rho >= 0.0);
        REQUIRE(base.rho <= 1.0);

        std::vector<double> mapped;
        for (double x : xs) mapped.push_back(3.75 * x + 11.0);
        const RelevanceReport scaled = relevance(single_linkage_1d(mapped), alpha);
        CHECK(scaled.occurred == base.occurred);
        CHECK(scaled.rho == doctest::Approx(base.rho).epsilon(1e-9));
    }
}

TEST_CASE("branches are disjoint, above threshold, and contiguous") {
    for (std::uint64_t seed = 50; seed < 70; ++seed) {
        const auto xs = gen_two_cluster_model({}, seed);
        if (xs.size() < 2) continue;
        const MergeTree tree = single_linkage_1d(xs);
        const PrunedTree pruned = prune_and_contract(tree, 4.0);

        std::vector<std::size_t> position(xs.size());
        for (std::size_t p = 0; p < tree.leaves.size(); ++p)
            position[tree.leaves[p].source_row] = p;

        std::set<std::size_t> seen;
        for (const auto& branch : pruned.branches) {
            CHECK(static_cast<double>(branch.member_rows.size()) >= pruned.threshold);
            CHECK(branch.formation_height <= branch.split_height);
            CHECK(branch.split_height <= pruned.root_height);
            std::vector<std::size_t> run;
            for (std::size_t row : branch.member_rows) {
                CHECK(seen.insert(row).second);  // disjoint
                run.push_back(position[row]);
            }
            for (std::size_t i = 0; i + 1 < run.size(); ++i)
                CHECK(run[i] + 1 == run[i + 1]);  // contiguous, coordinate order
        }
    }
}

TEST_CASE("raising alpha never loses qualifying nodes") {
    for (std::uint64_t seed = 200; seed < 210; ++seed) {
        const auto xs = testing_support::random_instance(seed, 150);
        const MergeTree tree = single_linkage_1d(xs);
        std::size_t prev = 0;
        for (double alpha : {1.0, 2.0, 4.0, 8.0, 32.0, 1024.0}) {
            const std::size_t q = qualifying_nodes(tree, alpha);
            CHECK(q >= prev);
            prev = q;
        }
    }
}

TEST_CASE("single interstice between two tight clusters") {
    const std::vector<double> xs{0.1, 0.12, 0.14, 0.8, 0.82, 0.84};
    const Slice1D s = slice_of(xs);
    const RelevanceReport report = relevance(single_linkage_1d(xs), 4.0);
    REQUIRE(report.occurred);

    const auto gaps = find_interstices(s, report);
    REQUIRE(gaps.size() == 1);
    CHECK(gaps[0].xa == 0.14);
    CHECK(gaps[0].xb == 0.8);
    CHECK(gaps[0].left_rows == std::vector<std::size_t>{0, 1, 2});
    CHECK(gaps[0].right_rows == std::vector<std::size_t>{3, 4, 5});
}

TEST_CASE("three clusters yield two interstices, left to right") {
    const std::vector<double> xs{0.1,  0.11, 0.12, 0.5,  0.51,
                                 0.52, 0.9,  0.91, 0.92};
    const Slice1D s = slice_of(xs);
    const RelevanceReport report = relevance(single_linkage_1d(xs), 3.0);  // n = 3
    REQUIRE(report.occurred);
    REQUIRE(report.branches.size() == 3);

    const auto gaps = find_interstices(s, report);
    REQUIRE(gaps.size() == 2);
    CHECK(gaps[0].xa == 0.12);
    CHECK(gaps[0].xb == 0.5);
    CHECK(gaps[1].xa == 0.52);
    CHECK(gaps[1].xb == 0.9);
    CHECK(gaps[0].xb <= gaps[1].xa);
}

TEST_CASE("find_interstices requires an occurred report") {
    const std::vector<double> xs{0.0, 1.0};
    const RelevanceReport report = relevance(single_linkage_1d(xs), 1.0);  // n = 2: one branch
    REQUIRE_FALSE(report.occurred);
    CHECK_THROWS_AS(find_interstices(slice_of(xs), report), std::invalid_argument);
}

TEST_CASE("interstice endpoints bound their clusters' coordinates") {
    for (std::uint64_t seed = 400; seed < 430; ++seed) {
        const auto xs = gen_two_cluster_model({}, seed);
        const RelevanceReport report = relevance(single_linkage_1d(xs), 4.0);
        if (!report.occurred) continue;
        const Slice1D s = slice_of(xs);
        for (const auto& gap : find_interstices(s, report)) {
            REQUIRE(gap.xa < gap.xb);
            for (std::size_t row : gap.left_rows) CHECK(xs[row] <= gap.xa);
            for (std::size_t row : gap.right_rows) CHECK(xs[row] >= gap.xb);
        }
    }
}

TEST_CASE("two-interval model: the interstice lands in the sparse region") {
    const TwoClusterModel model{};  // x1=0.4, x2=0.6, lambdas 140/20/120
    std::size_t occurred = 0, total = 0;
    for (std::uint64_t seed = 1000; seed < 1100; ++seed) {
        const auto xs = gen_two_cluster_model(model, seed);
        const RelevanceReport report = relevance(single_linkage_1d(xs), 4.0);
        ++total;
        if (!report.occurred) continue;
        ++occurred;
        const auto gaps = find_interstices(slice_of(xs), report);
        REQUIRE(!gaps.empty());
        // widest interstice is the detected separation
        const auto widest = std::max_element(
            gaps.begin(), gaps.end(),
            [](const Interstice& a, const Interstice& b) { return a.xb - a.xa < b.xb - b.xa; });
        CHECK(widest->xa > model.x1 - 0.1);
        CHECK(widest->xb < model.x2 + 0.1);
        CHECK(widest->xb > model.x1);
        CHECK(widest->xa < model.x2);
    }
    CHECK(occurred >= total * 9 / 10);
}
