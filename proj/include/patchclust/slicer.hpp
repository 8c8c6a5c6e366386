#pragma once

#include <cstdint>
#include <vector>

#include "patchclust/dataset.hpp"
#include "patchclust/slice.hpp"

namespace patchclust {

// Per-column standardization parameters (sample standard deviation, N-1
// denominator), kept for mapping results back to raw feature units.
struct ColumnStats {
    std::vector<double> mean;
    std::vector<double> sd;
};

struct StandardizeResult {
    Dataset data;
    ColumnStats stats;
};

// Rescales every column to mean 0 and sample standard deviation 1. Requires
// N >= 2; throws std::invalid_argument naming the column when one is
// constant (sd = 0). Labels pass through untouched.
StandardizeResult standardize(const Dataset& ds);

// Adds i.i.d. uniform noise in [-amplitude, amplitude] to every value. Each
// cell's draw is derived from (seed, row, column), so the result is
// reproducible per seed and independent of evaluation order.
Dataset add_uniform_noise(const Dataset& ds, double amplitude, std::uint64_t seed);

// Cartesian product of `values` over the M-1 fixed coordinates, in
// lexicographic order (leftmost fixed column most significant). M = 1 yields
// a single empty anchor. Throws when free_index is out of range.
std::vector<std::vector<double>> grid_anchors(std::size_t m, const std::vector<double>& values,
                                              std::size_t free_index);

// Rows within Euclidean distance r of the hypercylinder axis (distance over
// the fixed features only, boundary inclusive). Coordinates are the free
// feature's values, sorted ascending with row index as tiebreak. Empty
// slices are valid.
Slice1D slice(const Dataset& ds, const SliceSpec& spec);

}  // namespace patchclust
