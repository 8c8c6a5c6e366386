#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "json.hpp"
#include "patchclust/io.hpp"
#include "patchclust/linkage.hpp"
#include "patchclust/relevance.hpp"
#include "patchclust/svg.hpp"

using namespace patchclust;

TEST_CASE("dataset CSV round trip is bit-exact") {
    const Dataset ds = validate_dataset(
        {{0.1, 1.0 / 3.0, 1e-300}, {-0.0, 2.5e17, -7.25}, {3.14159265358979, 1e300, 0.0}},
        {"a", "b", "c"}, {5, -2, 0});

    std::ostringstream out;
    write_dataset_csv(ds, out);
    std::istringstream in(out.str());
    const Dataset back = read_dataset_csv(in);

    REQUIRE(back.row_count() == ds.row_count());
    REQUIRE(back.column_count() == ds.column_count());
    CHECK(back.values() == ds.values());
    CHECK(back.labels() == ds.labels());
    CHECK(back.names() == ds.names());
}

TEST_CASE("CSV reader flags bad tokens with their position") {
    std::istringstream in("a,b\n1.0,2.0\n1.0,oops\n");
    try {
        read_dataset_csv(in);
        FAIL("expected an exception");
    } catch (const std::invalid_argument& e) {
        const std::string msg = e.what();
        CHECK(msg.find("row 1") != std::string::npos);
        CHECK(msg.find("column 1") != std::string::npos);
    }
}

TEST_CASE("CSV reader rejects ragged rows and missing headers") {
    std::istringstream ragged("a,b\n1.0\n");
    CHECK_THROWS_AS(read_dataset_csv(ragged), std::invalid_argument);
    std::istringstream empty("");
    CHECK_THROWS_AS(read_dataset_csv(empty), std::invalid_argument);
}

TEST_CASE("a final 'label' column becomes integer labels") {
    std::istringstream in("x,label\n0.5,1\n0.25,0\n");
    const Dataset ds = read_dataset_csv(in);
    CHECK(ds.column_count() == 1);
    REQUIRE(ds.has_labels());
    CHECK(ds.labels() == std::vector<long long>{1, 0});
}

TEST_CASE("merge CSV round trip is bit-exact") {
    const MergeTree tree = single_linkage_1d(std::vector<double>{0.0, 0.1, 0.30000001, 7.5, 7.5});
    std::ostringstream out;
    write_merges_csv(tree, out);
    std::istringstream in(out.str());
    const auto merges = read_merges_csv(in);
    REQUIRE(merges.size() == tree.merges.size());
    for (std::size_t k = 0; k < merges.size(); ++k) {
        CHECK(merges[k].left == tree.merges[k].left);
        CHECK(merges[k].right == tree.merges[k].right);
        CHECK(merges[k].height == tree.merges[k].height);
    }
}

TEST_CASE("relevance report JSON round trip is bit-exact") {
    const MergeTree tree =
        single_linkage_1d(std::vector<double>{0.0, 0.01, 0.02, 0.5, 0.51, 0.52});
    const RelevanceReport report = relevance(tree, 4.0);
    const RelevanceReport back = report_from_json(report_to_json(report));

    CHECK(back.rho == report.rho);
    CHECK(back.H == report.H);
    CHECK(back.occurred == report.occurred);
    CHECK(back.degenerate == report.degenerate);
    REQUIRE(back.branches.size() == report.branches.size());
    for (std::size_t i = 0; i < back.branches.size(); ++i) {
        CHECK(back.branches[i].member_rows == report.branches[i].member_rows);
        CHECK(back.branches[i].formation_height == report.branches[i].formation_height);
        CHECK(back.branches[i].split_height == report.branches[i].split_height);
    }
}

TEST_CASE("report JSON exposes the contract field names") {
    const MergeTree tree = single_linkage_1d(std::vector<double>{0.0, 1.0, 10.0});
    const auto j = nlohmann::json::parse(report_to_json(relevance(tree, 3.0)));
    CHECK(j.contains("rho"));
    CHECK(j.contains("H"));
    CHECK(j.contains("occurred"));
    CHECK(j.contains("branches"));
    REQUIRE(j.at("branches").is_array());
}

TEST_CASE("interstice JSON uses xa/xb/left_rows/right_rows") {
    Interstice gap;
    gap.xa = 0.25;
    gap.xb = 0.75;
    gap.left_rows = {0, 1};
    gap.right_rows = {2};
    const auto j = nlohmann::json::parse(interstices_to_json({gap}));
    REQUIRE(j.is_array());
    CHECK(j[0].at("xa").get<double>() == 0.25);
    CHECK(j[0].at("xb").get<double>() == 0.75);
    CHECK(j[0].at("left_rows").get<std::vector<std::size_t>>() == gap.left_rows);
    CHECK(j[0].at("right_rows").get<std::vector<std::size_t>>() == gap.right_rows);
}

TEST_CASE("tree JSON round trip reproduces the tree") {
    const MergeTree tree = single_linkage_1d(std::vector<double>{3.0, 1.0, 4.0, 1.0, 5.0});
    const MergeTree back = tree_from_json(tree_to_json(tree));
    CHECK(trees_equal(tree, back));
}

TEST_CASE("a merge list of a single-leaf tree round trips as empty") {
    const MergeTree tree = single_linkage_1d(std::vector<double>{42.0});
    std::ostringstream out;
    write_merges_csv(tree, out);
    std::istringstream in(out.str());
    CHECK(read_merges_csv(in).empty());
}

TEST_CASE("missing files are reported") {
    CHECK_THROWS_AS(read_dataset_csv_file("/nonexistent/path.csv"), std::runtime_error);
}

TEST_CASE("dendrogram SVG is well formed for tiny trees") {
    for (std::size_t n : {std::size_t{0}, std::size_t{1}, std::size_t{5}}) {
        std::vector<double> xs;
        for (std::size_t i = 0; i < n; ++i) xs.push_back(static_cast<double>(i * i));
        std::ostringstream out;
        render_dendrogram_svg(single_linkage_1d(xs), out);
        const std::string svg = out.str();
        CHECK(svg.rfind("<svg", 0) == 0);
        CHECK(svg.find("</svg>") != std::string::npos);
    }
}

TEST_CASE("feature config parses its exact field names") {
    const FeatureSelectionConfig cfg = feature_config_from_json(
        R"({"gridValues": [-1, 0, 1], "radius": 1.5, "alpha": 3,
            "minSlicePoints": 80, "noiseAmplitude": 0.1, "seed": 9})");
    CHECK(cfg.gridValues == std::vector<double>{-1, 0, 1});
    CHECK(cfg.radius == 1.5);
    CHECK(cfg.alpha == 3.0);
    CHECK(cfg.minSlicePoints == 80);
    CHECK(cfg.noiseAmplitude == 0.1);
    CHECK(cfg.seed == 9);

    const FeatureSelectionConfig defaults = feature_config_from_json("{}");
    CHECK(defaults.gridValues == std::vector<double>{-2, -1, 0, 1, 2});
    CHECK(defaults.radius == 2.0);
    CHECK(defaults.alpha == 4.0);
    CHECK(defaults.minSlicePoints == 150);
    CHECK(defaults.noiseAmplitude == 0.2);

    CHECK_THROWS_AS(feature_config_from_json(R"({"Radius": 2})"), std::invalid_argument);

    const FeatureSelectionConfig round =
        feature_config_from_json(feature_config_to_json(cfg));
    CHECK(round.gridValues == cfg.gridValues);
    CHECK(round.radius == cfg.radius);
}
