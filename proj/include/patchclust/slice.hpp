#pragma once

#include <cstddef>
#include <vector>

namespace patchclust {

// An axis-aligned hypercylinder: the line along feature `free_index` through
// the M-1 fixed anchor values, thickened to radius r. min_points is carried
// for pipeline filtering; the slice operation itself is a pure geometric
// query.
struct SliceSpec {
    std::size_t free_index = 0;
    std::vector<double> anchor;  // M-1 values for the fixed features, ascending column order
    double radius = 0.0;
    std::size_t min_points = 0;
};

// The 1D signal extracted by a slice: free-feature coordinates sorted
// ascending (source row as tiebreak) with back-references into the dataset.
struct Slice1D {
    std::vector<double> coords;
    std::vector<std::size_t> source_rows;

    std::size_t size() const { return coords.size(); }
};

}  // namespace patchclust
