#include "patchclust/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "patchclust/linkage.hpp"
#include "patchclust/slicer.hpp"

namespace patchclust {

namespace {

Dataset prepare(const Dataset& ds, const FeatureSelectionConfig& cfg) {
    return add_uniform_noise(standardize(ds).data, cfg.noiseAmplitude, cfg.seed);
}

// Walks every retained slice of the prepared table in deterministic
// (feature, anchor) order.
template <typename Fn>
void for_each_retained_slice(const Dataset& prepared, const FeatureSelectionConfig& cfg, Fn&& fn) {
    const std::size_t m = prepared.column_count();
    for (std::size_t feature = 0; feature < m; ++feature) {
        const auto anchors = grid_anchors(m, cfg.gridValues, feature);
        for (const auto& anchor : anchors) {
            Slice1D s = slice(prepared, {feature, anchor, cfg.radius, cfg.minSlicePoints});
            if (s.size() > cfg.minSlicePoints) fn(feature, s);
        }
    }
}

}  // namespace

std::vector<FeatureReportRow> select_features(const Dataset& ds,
                                              const FeatureSelectionConfig& cfg) {
    if (ds.column_count() < 2)
        throw std::invalid_argument("feature selection requires at least 2 features");

    const Dataset prepared = prepare(ds, cfg);
    const std::size_t m = prepared.column_count();

    std::vector<FeatureReportRow> rows(m);
    std::vector<double> rho_sum(m, 0.0);
    for (std::size_t j = 0; j < m; ++j) rows[j].feature = prepared.names()[j];

    for_each_retained_slice(prepared, cfg, [&](std::size_t feature, const Slice1D& s) {
        const RelevanceReport report = relevance(single_linkage_1d(s), cfg.alpha);
        if (report.occurred) {
            ++rows[feature].occurrences;
            rho_sum[feature] += report.rho;
        }
    });

    for (std::size_t j = 0; j < m; ++j) {
        if (rows[j].occurrences > 0)
            rows[j].meanRelevance = rho_sum[j] / static_cast<double>(rows[j].occurrences);
        rows[j].product = static_cast<double>(rows[j].occurrences) * rows[j].meanRelevance;
    }

    std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        return a.product > b.product;
    });
    return rows;
}

SlicePopulationHistogram slice_population_histogram(const Dataset& ds,
                                                    const FeatureSelectionConfig& cfg) {
    if (ds.column_count() < 2)
        throw std::invalid_argument("slice histogram requires at least 2 features");

    const Dataset prepared = prepare(ds, cfg);
    std::vector<std::size_t> populations;
    for_each_retained_slice(prepared, cfg, [&](std::size_t, const Slice1D& s) {
        populations.push_back(s.size());
    });

    SlicePopulationHistogram hist;
    hist.slice_count = populations.size();
    if (populations.empty()) return hist;

    double sum = 0.0;
    std::size_t lo = populations.front(), hi = populations.front();
    for (std::size_t p : populations) {
        sum += static_cast<double>(p);
        lo = std::min(lo, p);
        hi = std::max(hi, p);
    }
    hist.mean = sum / static_cast<double>(populations.size());
    hist.mean_defined = true;

    const std::size_t bins = std::min<std::size_t>(20, std::max<std::size_t>(1, populations.size()));
    const double width = std::max(1.0, (static_cast<double>(hi) - static_cast<double>(lo)) /
                                           static_cast<double>(bins));
    hist.bin_edges.resize(bins + 1);
    for (std::size_t b = 0; b <= bins; ++b)
        hist.bin_edges[b] = static_cast<double>(lo) + width * static_cast<double>(b);
    hist.counts.assign(bins, 0);
    for (std::size_t p : populations) {
        auto b = static_cast<std::size_t>((static_cast<double>(p) - static_cast<double>(lo)) / width);
        if (b >= bins) b = bins - 1;
        ++hist.counts[b];
    }
    return hist;
}

std::vector<InterstitialPatch> detect_interstices(const Dataset& ds, std::size_t free_index,
                                                  const std::vector<std::vector<double>>& anchors,
                                                  double radius, double alpha,
                                                  std::size_t min_slice_points) {
    std::vector<InterstitialPatch> patches;
    for (const auto& anchor : anchors) {
        Slice1D s = slice(ds, {free_index, anchor, radius, min_slice_points});
        if (s.size() <= min_slice_points) continue;

        const RelevanceReport report = relevance(single_linkage_1d(s), alpha);
        if (!report.occurred) continue;

        for (const Interstice& gap : find_interstices(s, report)) {
            InterstitialPatch patch;
            patch.anchor = anchor;
            patch.free_index = free_index;
            patch.xa = gap.xa;
            patch.xb = gap.xb;
            patch.radius = radius;
            patches.push_back(std::move(patch));
        }
    }
    return patches;
}

}  // namespace patchclust
