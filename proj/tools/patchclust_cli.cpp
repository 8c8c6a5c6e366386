#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "patchclust/io.hpp"
#include "patchclust/linkage.hpp"
#include "patchclust/pipeline.hpp"
#include "patchclust/relevance.hpp"
#include "patchclust/slicer.hpp"
#include "patchclust/svg.hpp"
#include "patchclust/synth.hpp"

namespace {

using namespace patchclust;
using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << text;
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty())
        std::cout << text << '\n';
    else
        write_file(out_path, text);
}

Dataset values_to_dataset(const std::vector<double>& xs, const std::string& name) {
    std::vector<std::vector<double>> rows;
    rows.reserve(xs.size());
    for (double x : xs) rows.push_back({x});
    return validate_dataset(rows, {name});
}

struct GenOptions {
    std::string model;
    std::string out;
    std::uint64_t seed = 0;
    std::size_t count = 5000;
    double lambda = 500.0, lo = 0.0, hi = 1.0;
    double mu = 0.0, sigma = 0.1;
    TwoClusterModel two_cluster;
    double gap = 0.2;
};

int run_gen(const GenOptions& opt) {
    json meta{{"model", opt.model}, {"seed", opt.seed}};
    Dataset ds;
    if (opt.model == "poisson-uniform") {
        ds = values_to_dataset(gen_poisson_uniform(opt.lambda, opt.lo, opt.hi, opt.seed), "x");
        meta["lambda"] = opt.lambda;
        meta["lo"] = opt.lo;
        meta["hi"] = opt.hi;
    } else if (opt.model == "uniform-fixed") {
        ds = values_to_dataset(gen_uniform_fixed(opt.count, opt.lo, opt.hi, opt.seed), "x");
        meta["count"] = opt.count;
        meta["lo"] = opt.lo;
        meta["hi"] = opt.hi;
    } else if (opt.model == "normal") {
        ds = values_to_dataset(gen_normal(opt.count, opt.mu, opt.sigma, opt.seed), "x");
        meta["count"] = opt.count;
        meta["mu"] = opt.mu;
        meta["sigma"] = opt.sigma;
    } else if (opt.model == "two-cluster") {
        ds = values_to_dataset(gen_two_cluster_model(opt.two_cluster, opt.seed), "x");
        meta["x1"] = opt.two_cluster.x1;
        meta["x2"] = opt.two_cluster.x2;
        meta["lambda1"] = opt.two_cluster.lambda1;
        meta["lambda2"] = opt.two_cluster.lambda2;
        meta["lambda3"] = opt.two_cluster.lambda3;
        meta["ground_truth_interstice"] = {opt.two_cluster.x1, opt.two_cluster.x2};
    } else if (opt.model == "shapes") {
        ds = gen_shapes(opt.count, opt.seed);
        meta["count"] = opt.count;
    } else if (opt.model == "elongated-2d") {
        Elongated2D e = gen_elongated_2d(opt.count, opt.gap, opt.seed);
        ds = std::move(e.data);
        meta["count"] = opt.count;
        meta["gap"] = opt.gap;
        meta["ground_truth_gap"] = {e.gap_lo, e.gap_hi};
    } else {
        throw std::runtime_error("unknown model '" + opt.model +
                                 "' (expected poisson-uniform, uniform-fixed, normal, "
                                 "two-cluster, shapes, elongated-2d)");
    }

    write_dataset_csv_file(ds, opt.out);
    write_file(opt.out + ".meta.json", meta.dump(2) + "\n");
    std::cout << "wrote " << ds.row_count() << " rows to " << opt.out << '\n';
    return 0;
}

std::size_t resolve_column(const Dataset& ds, const std::string& column) {
    if (!column.empty() && column.find_first_not_of("0123456789") == std::string::npos)
        return std::stoul(column);
    return ds.column_index(column);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"patched cluster detection via 1D hypercylinder slices"};
    app.require_subcommand(1);

    GenOptions gen_opt;
    auto* gen = app.add_subcommand("gen", "generate a synthetic dataset (CSV + JSON sidecar)");
    gen->add_option("model", gen_opt.model,
                    "poisson-uniform | uniform-fixed | normal | two-cluster | shapes | elongated-2d")
        ->required();
    gen->add_option("--out", gen_opt.out, "output CSV path")->required();
    gen->add_option("--seed", gen_opt.seed, "RNG seed");
    gen->add_option("--count", gen_opt.count, "point count (normal, shapes, elongated-2d)");
    gen->add_option("--lambda", gen_opt.lambda, "intensity (poisson-uniform)");
    gen->add_option("--lo", gen_opt.lo, "interval start (poisson-uniform)");
    gen->add_option("--hi", gen_opt.hi, "interval end (poisson-uniform)");
    gen->add_option("--mu", gen_opt.mu, "mean (normal)");
    gen->add_option("--sigma", gen_opt.sigma, "standard deviation (normal)");
    gen->add_option("--x1", gen_opt.two_cluster.x1, "left boundary (two-cluster)");
    gen->add_option("--x2", gen_opt.two_cluster.x2, "right boundary (two-cluster)");
    gen->add_option("--lambda1", gen_opt.two_cluster.lambda1, "left intensity (two-cluster)");
    gen->add_option("--lambda2", gen_opt.two_cluster.lambda2, "middle intensity (two-cluster)");
    gen->add_option("--lambda3", gen_opt.two_cluster.lambda3, "right intensity (two-cluster)");
    gen->add_option("--gap", gen_opt.gap, "gap width (elongated-2d)");

    std::string dendro_csv, dendro_column = "0", dendro_json, dendro_svg, dendro_merges,
        dendro_interstices;
    double dendro_alpha = 4.0;
    auto* dendro = app.add_subcommand("dendro", "1D dendrogram and relevance of one column");
    dendro->add_option("csv", dendro_csv, "input dataset CSV")->required();
    dendro->add_option("--column", dendro_column, "column name or index (default 0)");
    dendro->add_option("--alpha", dendro_alpha, "pruning parameter (n = N/alpha)");
    dendro->add_option("--json", dendro_json, "write relevance report JSON here");
    dendro->add_option("--svg", dendro_svg, "write dendrogram SVG here");
    dendro->add_option("--merges-csv", dendro_merges, "write merge list CSV here");
    dendro->add_option("--interstices", dendro_interstices,
                       "write interstice list JSON here (empty list when nothing occurred)");

    std::string sf_csv, sf_config, sf_out;
    auto* sf = app.add_subcommand("select-features", "slice-and-score feature selection");
    sf->add_option("csv", sf_csv, "input dataset CSV")->required();
    sf->add_option("--config", sf_config, "JSON config file");
    sf->add_option("--out", sf_out, "output JSON path (default stdout)");

    std::string di_csv, di_config, di_out;
    auto* di = app.add_subcommand("detect-interstices", "mark separation patches along one feature");
    di->add_option("csv", di_csv, "input dataset CSV")->required();
    di->add_option("--config", di_config, "JSON config file")->required();
    di->add_option("--out", di_out, "output JSON path (default stdout)");

    std::string sh_csv, sh_config, sh_out;
    auto* sh = app.add_subcommand("slice-hist", "histogram of retained slice populations");
    sh->add_option("csv", sh_csv, "input dataset CSV")->required();
    sh->add_option("--config", sh_config, "JSON config file");
    sh->add_option("--out", sh_out, "output JSON path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return run_gen(gen_opt);

        if (dendro->parsed()) {
            const Dataset ds = read_dataset_csv_file(dendro_csv);
            const std::size_t col = resolve_column(ds, dendro_column);
            const MergeTree tree = single_linkage_1d(ds.column(col));
            const RelevanceReport report = relevance(tree, dendro_alpha);
            if (!dendro_merges.empty()) {
                std::ofstream out(dendro_merges);
                write_merges_csv(tree, out);
            }
            if (!dendro_svg.empty()) render_dendrogram_svg_file(tree, dendro_svg);
            if (!dendro_interstices.empty()) {
                std::vector<Interstice> gaps;
                if (report.occurred) {
                    Slice1D whole;
                    for (const auto& leaf : tree.leaves) {
                        whole.coords.push_back(leaf.coord);
                        whole.source_rows.push_back(leaf.source_row);
                    }
                    gaps = find_interstices(whole, report);
                }
                write_file(dendro_interstices, interstices_to_json(gaps) + "\n");
            }
            emit(dendro_json, report_to_json(report));
            return 0;
        }

        if (sf->parsed()) {
            const Dataset ds = read_dataset_csv_file(sf_csv);
            const FeatureSelectionConfig cfg =
                sf_config.empty() ? FeatureSelectionConfig{}
                                  : feature_config_from_json(read_file(sf_config));
            emit(sf_out, feature_report_to_json(select_features(ds, cfg)));
            return 0;
        }

        if (di->parsed()) {
            Dataset ds = read_dataset_csv_file(di_csv);
            const json cfg = json::parse(read_file(di_config));
            const std::size_t free_index = cfg.value("freeIndex", std::size_t{0});
            const double radius = cfg.value("radius", 0.1);
            const double alpha = cfg.value("alpha", 4.0);
            const std::size_t min_points = cfg.value("minSlicePoints", std::size_t{100});
            if (cfg.value("standardize", false)) ds = standardize(ds).data;

            std::vector<std::vector<double>> anchors;
            if (ds.column_count() == 1) {
                anchors.push_back({});  // the whole axis is one slice
            } else if (cfg.contains("anchorValues")) {
                for (double v : cfg.at("anchorValues").get<std::vector<double>>())
                    anchors.push_back({v});
            } else if (cfg.contains("anchorStart")) {
                const double start = cfg.at("anchorStart").get<double>();
                const double step = cfg.at("anchorStep").get<double>();
                const double stop = cfg.at("anchorStop").get<double>();
                for (double v = start; v <= stop + step * 1e-9; v += step)
                    anchors.push_back({v});
            } else if (cfg.contains("gridValues")) {
                anchors = grid_anchors(ds.column_count(),
                                       cfg.at("gridValues").get<std::vector<double>>(),
                                       free_index);
            } else {
                throw std::runtime_error(
                    "config needs anchorValues, anchorStart/Step/Stop, or gridValues");
            }

            const auto patches =
                detect_interstices(ds, free_index, anchors, radius, alpha, min_points);
            emit(di_out, patches_to_json(patches));
            return 0;
        }

        if (sh->parsed()) {
            const Dataset ds = read_dataset_csv_file(sh_csv);
            const FeatureSelectionConfig cfg =
                sh_config.empty() ? FeatureSelectionConfig{}
                                  : feature_config_from_json(read_file(sh_config));
            emit(sh_out, histogram_to_json(slice_population_histogram(ds, cfg)));
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
