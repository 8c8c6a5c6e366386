#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "patchclust/dataset.hpp"
#include "patchclust/merge_tree.hpp"
#include "patchclust/pipeline.hpp"
#include "patchclust/relevance.hpp"

namespace patchclust {

// Doubles are written with the shortest representation that parses back to
// the identical bits, so every round trip below is exact.

// CSV with a header row of column names; one row per point; an optional
// final column named "label" is parsed as integer labels.
Dataset read_dataset_csv(std::istream& in);
Dataset read_dataset_csv_file(const std::string& path);
void write_dataset_csv(const Dataset& ds, std::ostream& out);
void write_dataset_csv_file(const Dataset& ds, const std::string& path);

// Merge list as CSV of (merge_index, left, right, height); nodes 0..N-1 are
// leaves and node N+k is the k-th merge.
void write_merges_csv(const MergeTree& tree, std::ostream& out);
std::vector<MergeTree::Merge> read_merges_csv(std::istream& in);

// JSON documents with fixed field names.
std::string report_to_json(const RelevanceReport& report);
RelevanceReport report_from_json(const std::string& text);

std::string interstices_to_json(const std::vector<Interstice>& interstices);
std::string patches_to_json(const std::vector<InterstitialPatch>& patches);
std::string feature_report_to_json(const std::vector<FeatureReportRow>& rows);
std::string histogram_to_json(const SlicePopulationHistogram& hist);

// Full dendrogram plus leaves, for archival round trips.
std::string tree_to_json(const MergeTree& tree);
MergeTree tree_from_json(const std::string& text);

// Config document mirroring FeatureSelectionConfig field names exactly;
// absent keys keep their defaults, unknown keys are rejected.
FeatureSelectionConfig feature_config_from_json(const std::string& text);
std::string feature_config_to_json(const FeatureSelectionConfig& cfg);

std::string format_double(double v);

}  // namespace patchclust
