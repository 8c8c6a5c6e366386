#pragma once

#include <iosfwd>
#include <string>

#include "patchclust/merge_tree.hpp"

namespace patchclust {

// Draws the dendrogram as an SVG: leaves as ticks on a baseline, merges as
// brackets at their heights. Presentation only.
void render_dendrogram_svg(const MergeTree& tree, std::ostream& out, int width = 900,
                           int height = 520);

void render_dendrogram_svg_file(const MergeTree& tree, const std::string& path);

}  // namespace patchclust
