#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "patchclust/dataset.hpp"
#include "patchclust/relevance.hpp"

namespace patchclust {

// Parameters of the slice-and-score feature selection run. Field names match
// the JSON config document one to one.
struct FeatureSelectionConfig {
    std::vector<double> gridValues{-2.0, -1.0, 0.0, 1.0, 2.0};
    double radius = 2.0;
    double alpha = 4.0;
    std::size_t minSlicePoints = 150;  // strict: slices must exceed this
    double noiseAmplitude = 0.2;
    std::uint64_t seed = 0;
};

struct FeatureReportRow {
    std::string feature;
    std::size_t occurrences = 0;   // slices with at least two qualifying clusters
    double meanRelevance = 0.0;    // mean rho over occurred slices only
    double product = 0.0;          // occurrences * meanRelevance
};

// For each feature: standardize the table, inject noise, slice along the
// feature at every grid anchor, drop slices with population <= minSlicePoints,
// and score the rest with the relevance index. Rows come back sorted by
// product, highest first (feature order breaks ties). Requires M >= 2
// features; a feature whose slices are all under-populated reports zero
// occurrences.
std::vector<FeatureReportRow> select_features(const Dataset& ds,
                                              const FeatureSelectionConfig& cfg);

struct SlicePopulationHistogram {
    std::vector<double> bin_edges;     // counts.size() + 1 edges; empty when no slices
    std::vector<std::size_t> counts;
    double mean = 0.0;
    bool mean_defined = false;
    std::size_t slice_count = 0;
};

// Histogram of retained-slice populations over the same slices
// select_features evaluates.
SlicePopulationHistogram slice_population_histogram(const Dataset& ds,
                                                    const FeatureSelectionConfig& cfg);

// A detected separation patch: the interstice [xa, xb] found along
// free_index at one anchor of fixed feature values.
struct InterstitialPatch {
    std::vector<double> anchor;
    std::size_t free_index = 0;
    double xa = 0.0;
    double xb = 0.0;
    double radius = 0.0;
};

// Slices the dataset (in whatever coordinates it is given; standardization is
// the caller's choice) along free_index at each anchor, and emits one patch
// per interstice of every occurred slice with population > min_slice_points.
// Patches are ordered by anchor, then xa.
std::vector<InterstitialPatch> detect_interstices(const Dataset& ds, std::size_t free_index,
                                                  const std::vector<std::vector<double>>& anchors,
                                                  double radius, double alpha,
                                                  std::size_t min_slice_points);

}  // namespace patchclust
