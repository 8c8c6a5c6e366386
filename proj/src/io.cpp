#include "patchclust/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace patchclust {

namespace {

using nlohmann::json;

double parse_double(const std::string& token, std::size_t row, std::size_t col) {
    double value = 0.0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw std::invalid_argument("bad numeric value '" + token + "' at row " +
                                    std::to_string(row) + ", column " + std::to_string(col));
    return value;
}

long long parse_label(const std::string& token, std::size_t row) {
    long long value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw std::invalid_argument("bad label '" + token + "' at row " + std::to_string(row));
    return value;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) out.push_back(field);
    if (!line.empty() && line.back() == ',') out.push_back("");
    return out;
}

json branch_to_json(const LeafBranch& branch) {
    return json{{"member_rows", branch.member_rows},
                {"formation_height", branch.formation_height},
                {"split_height", branch.split_height},
                {"length", branch.length()}};
}

LeafBranch branch_from_json(const json& j) {
    LeafBranch branch;
    branch.member_rows = j.at("member_rows").get<std::vector<std::size_t>>();
    branch.formation_height = j.at("formation_height").get<double>();
    branch.split_height = j.at("split_height").get<double>();
    return branch;
}

}  // namespace

std::string format_double(double v) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return std::string(buf, ptr);
}

Dataset read_dataset_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("empty CSV: missing header");
    if (!line.empty() && line.back() == '\r') line.pop_back();

    std::vector<std::string> names = split_csv_line(line);
    const bool labelled = !names.empty() && names.back() == "label";
    if (labelled) names.pop_back();
    if (names.empty()) throw std::invalid_argument("CSV has no feature columns");

    std::vector<std::vector<double>> rows;
    std::vector<long long> labels;
    std::size_t row_index = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto fields = split_csv_line(line);
        const std::size_t expected = names.size() + (labelled ? 1 : 0);
        if (fields.size() != expected)
            throw std::invalid_argument("row " + std::to_string(row_index) + " has " +
                                        std::to_string(fields.size()) + " fields, expected " +
                                        std::to_string(expected));
        std::vector<double> row(names.size());
        for (std::size_t j = 0; j < names.size(); ++j)
            row[j] = parse_double(fields[j], row_index, j);
        rows.push_back(std::move(row));
        if (labelled) labels.push_back(parse_label(fields.back(), row_index));
        ++row_index;
    }
    return validate_dataset(rows, std::move(names), std::move(labels));
}

Dataset read_dataset_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return read_dataset_csv(in);
}

void write_dataset_csv(const Dataset& ds, std::ostream& out) {
    for (std::size_t j = 0; j < ds.column_count(); ++j) {
        if (j) out << ',';
        out << ds.names()[j];
    }
    if (ds.has_labels()) out << ",label";
    out << '\n';
    for (std::size_t i = 0; i < ds.row_count(); ++i) {
        for (std::size_t j = 0; j < ds.column_count(); ++j) {
            if (j) out << ',';
            out << format_double(ds.value(i, j));
        }
        if (ds.has_labels()) out << ',' << ds.labels()[i];
        out << '\n';
    }
}

void write_dataset_csv_file(const Dataset& ds, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    write_dataset_csv(ds, out);
}

void write_merges_csv(const MergeTree& tree, std::ostream& out) {
    out << "merge_index,left,right,height\n";
    for (std::size_t k = 0; k < tree.merges.size(); ++k) {
        const auto& m = tree.merges[k];
        out << k << ',' << m.left << ',' << m.right << ',' << format_double(m.height) << '\n';
    }
}

std::vector<MergeTree::Merge> read_merges_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("empty merges CSV");
    std::vector<MergeTree::Merge> merges;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto fields = split_csv_line(line);
        if (fields.size() != 4)
            throw std::invalid_argument("merges CSV row " + std::to_string(row) +
                                        " needs 4 fields");
        MergeTree::Merge m;
        m.left = static_cast<std::size_t>(parse_label(fields[1], row));
        m.right = static_cast<std::size_t>(parse_label(fields[2], row));
        m.height = parse_double(fields[3], row, 3);
        merges.push_back(m);
        ++row;
    }
    return merges;
}

std::string report_to_json(const RelevanceReport& report) {
    json branches = json::array();
    for (const auto& branch : report.branches) branches.push_back(branch_to_json(branch));
    const json j{{"rho", report.rho},
                 {"H", report.H},
                 {"occurred", report.occurred},
                 {"degenerate", report.degenerate},
                 {"branches", branches}};
    return j.dump(2);
}

RelevanceReport report_from_json(const std::string& text) {
    const json j = json::parse(text);
    RelevanceReport report;
    report.rho = j.at("rho").get<double>();
    report.H = j.at("H").get<double>();
    report.occurred = j.at("occurred").get<bool>();
    report.degenerate = j.value("degenerate", false);
    for (const auto& b : j.at("branches")) report.branches.push_back(branch_from_json(b));
    return report;
}

std::string interstices_to_json(const std::vector<Interstice>& interstices) {
    json arr = json::array();
    for (const auto& gap : interstices)
        arr.push_back(json{{"xa", gap.xa},
                           {"xb", gap.xb},
                           {"left_rows", gap.left_rows},
                           {"right_rows", gap.right_rows}});
    return arr.dump(2);
}

std::string patches_to_json(const std::vector<InterstitialPatch>& patches) {
    json arr = json::array();
    for (const auto& patch : patches)
        arr.push_back(json{{"anchor", patch.anchor},
                           {"free_index", patch.free_index},
                           {"xa", patch.xa},
                           {"xb", patch.xb},
                           {"radius", patch.radius}});
    return arr.dump(2);
}

std::string feature_report_to_json(const std::vector<FeatureReportRow>& rows) {
    json arr = json::array();
    for (const auto& row : rows)
        arr.push_back(json{{"feature", row.feature},
                           {"occurrences", row.occurrences},
                           {"meanRelevance", row.meanRelevance},
                           {"product", row.product}});
    return arr.dump(2);
}

std::string histogram_to_json(const SlicePopulationHistogram& hist) {
    return json{{"bin_edges", hist.bin_edges},
                {"counts", hist.counts},
                {"mean", hist.mean},
                {"mean_defined", hist.mean_defined},
                {"slice_count", hist.slice_count}}
        .dump(2);
}

std::string tree_to_json(const MergeTree& tree) {
    json leaves = json::array();
    for (const auto& leaf : tree.leaves)
        leaves.push_back(json{{"coord", leaf.coord}, {"source_row", leaf.source_row}});
    json merges = json::array();
    for (const auto& m : tree.merges)
        merges.push_back(json{{"left", m.left}, {"right", m.right}, {"height", m.height}});
    return json{{"leaves", leaves}, {"merges", merges}}.dump(2);
}

MergeTree tree_from_json(const std::string& text) {
    const json j = json::parse(text);
    MergeTree tree;
    for (const auto& leaf : j.at("leaves"))
        tree.leaves.push_back(
            {leaf.at("coord").get<double>(), leaf.at("source_row").get<std::size_t>()});
    for (const auto& m : j.at("merges"))
        tree.merges.push_back({m.at("left").get<std::size_t>(), m.at("right").get<std::size_t>(),
                               m.at("height").get<double>()});
    return tree;
}

FeatureSelectionConfig feature_config_from_json(const std::string& text) {
    const json j = json::parse(text);
    FeatureSelectionConfig cfg;
    for (const auto& [key, value] : j.items()) {
        if (key == "gridValues")
            cfg.gridValues = value.get<std::vector<double>>();
        else if (key == "radius")
            cfg.radius = value.get<double>();
        else if (key == "alpha")
            cfg.alpha = value.get<double>();
        else if (key == "minSlicePoints")
            cfg.minSlicePoints = value.get<std::size_t>();
        else if (key == "noiseAmplitude")
            cfg.noiseAmplitude = value.get<double>();
        else if (key == "seed")
            cfg.seed = value.get<std::uint64_t>();
        else
            throw std::invalid_argument("unknown config key '" + key + "'");
    }
    if (!(cfg.radius > 0.0)) throw std::invalid_argument("config radius must be positive");
    if (!(cfg.alpha > 0.0)) throw std::invalid_argument("config alpha must be positive");
    return cfg;
}

std::string feature_config_to_json(const FeatureSelectionConfig& cfg) {
    return json{{"gridValues", cfg.gridValues},
                {"radius", cfg.radius},
                {"alpha", cfg.alpha},
                {"minSlicePoints", cfg.minSlicePoints},
                {"noiseAmplitude", cfg.noiseAmplitude},
                {"seed", cfg.seed}}
        .dump(2);
}

}  // namespace patchclust
