#include "patchclust/slicer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "patchclust/rng.hpp"

namespace patchclust {

StandardizeResult standardize(const Dataset& ds) {
    const std::size_t n = ds.row_count();
    const std::size_t m = ds.column_count();
    if (n < 2) throw std::invalid_argument("standardize requires at least 2 rows");

    ColumnStats stats;
    stats.mean.resize(m);
    stats.sd.resize(m);
    for (std::size_t j = 0; j < m; ++j) {
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) sum += ds.value(i, j);
        const double mean = sum / static_cast<double>(n);
        double ss = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double d = ds.value(i, j) - mean;
            ss += d * d;
        }
        const double sd = std::sqrt(ss / static_cast<double>(n - 1));
        if (sd == 0.0)
            throw std::invalid_argument("constant column '" + ds.names()[j] +
                                        "' cannot be standardized");
        stats.mean[j] = mean;
        stats.sd[j] = sd;
    }

    std::vector<double> values;
    values.reserve(n * m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            values.push_back((ds.value(i, j) - stats.mean[j]) / stats.sd[j]);

    return {Dataset(ds.names(), std::move(values), ds.labels()), std::move(stats)};
}

Dataset add_uniform_noise(const Dataset& ds, double amplitude, std::uint64_t seed) {
    if (amplitude < 0.0) throw std::invalid_argument("noise amplitude must be >= 0");

    const std::size_t n = ds.row_count();
    const std::size_t m = ds.column_count();
    std::vector<double> values;
    values.reserve(n * m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const std::uint64_t cell = mix64(mix64(seed ^ mix64(i + 1)) ^ mix64(j + 1));
            const double u = static_cast<double>(cell >> 11) * 0x1.0p-53;  // [0, 1)
            values.push_back(ds.value(i, j) + amplitude * (2.0 * u - 1.0));
        }
    return Dataset(ds.names(), std::move(values), ds.labels());
}

std::vector<std::vector<double>> grid_anchors(std::size_t m, const std::vector<double>& values,
                                              std::size_t free_index) {
    if (m < 1) throw std::invalid_argument("grid_anchors requires M >= 1");
    if (free_index >= m)
        throw std::invalid_argument("free index " + std::to_string(free_index) +
                                    " out of range for M = " + std::to_string(m));
    if (values.empty()) throw std::invalid_argument("grid values must be non-empty");

    const std::size_t fixed = m - 1;
    std::vector<std::vector<double>> anchors;
    if (fixed == 0) {
        anchors.push_back({});
        return anchors;
    }

    // Odometer over the fixed coordinates, rightmost fastest.
    std::vector<std::size_t> idx(fixed, 0);
    for (;;) {
        std::vector<double> anchor(fixed);
        for (std::size_t d = 0; d < fixed; ++d) anchor[d] = values[idx[d]];
        anchors.push_back(std::move(anchor));

        std::size_t d = fixed;
        while (d > 0) {
            --d;
            if (++idx[d] < values.size()) break;
            idx[d] = 0;
            if (d == 0) return anchors;
        }
    }
}

Slice1D slice(const Dataset& ds, const SliceSpec& spec) {
    const std::size_t m = ds.column_count();
    if (spec.free_index >= m) throw std::invalid_argument("slice free index out of range");
    if (spec.anchor.size() + 1 != m)
        throw std::invalid_argument("anchor has " + std::to_string(spec.anchor.size()) +
                                    " values, expected " + std::to_string(m - 1));
    if (!(spec.radius > 0.0) || !std::isfinite(spec.radius))
        throw std::invalid_argument("slice radius must be finite and positive");

    const double r2 = spec.radius * spec.radius;
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < ds.row_count(); ++i) {
        double d2 = 0.0;
        std::size_t a = 0;
        for (std::size_t j = 0; j < m; ++j) {
            if (j == spec.free_index) continue;
            const double d = ds.value(i, j) - spec.anchor[a++];
            d2 += d * d;
            if (d2 > r2) break;
        }
        if (d2 <= r2) rows.push_back(i);
    }

    std::sort(rows.begin(), rows.end(), [&](std::size_t a, std::size_t b) {
        const double xa = ds.value(a, spec.free_index);
        const double xb = ds.value(b, spec.free_index);
        if (xa != xb) return xa < xb;
        return a < b;
    });

    Slice1D out;
    out.coords.reserve(rows.size());
    out.source_rows = std::move(rows);
    for (std::size_t row : out.source_rows) out.coords.push_back(ds.value(row, spec.free_index));
    return out;
}

}  // namespace patchclust
