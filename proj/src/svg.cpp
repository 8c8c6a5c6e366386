#include "patchclust/svg.hpp"

#include <fstream>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace patchclust {

namespace {

struct NodePlot {
    double x = 0.0;  // horizontal center in plot units
    double h = 0.0;  // height at which the node exists
};

}  // namespace

void render_dendrogram_svg(const MergeTree& tree, std::ostream& out, int width, int height) {
    const std::size_t n = tree.leaf_count();
    const double margin = 30.0;
    const double plot_w = width - 2 * margin;
    const double plot_h = height - 2 * margin;
    const double hmax = tree.root_height() > 0 ? tree.root_height() : 1.0;

    auto px = [&](double x) { return margin + x * plot_w; };
    auto py = [&](double h) { return height - margin - (h / hmax) * plot_h; };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    std::vector<NodePlot> plot(tree.node_count());
    const double step = n > 1 ? 1.0 / static_cast<double>(n - 1) : 0.5;
    for (std::size_t i = 0; i < n; ++i) {
        plot[i] = {n > 1 ? static_cast<double>(i) * step : 0.5, 0.0};
        out << "  <line x1=\"" << px(plot[i].x) << "\" y1=\"" << py(0) - 3 << "\" x2=\""
            << px(plot[i].x) << "\" y2=\"" << py(0) + 3
            << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    }

    for (std::size_t k = 0; k < tree.merges.size(); ++k) {
        const auto& m = tree.merges[k];
        const NodePlot& l = plot[m.left];
        const NodePlot& r = plot[m.right];
        const double y = py(m.height);
        // bracket: two risers and a crossbar
        out << "  <line x1=\"" << px(l.x) << "\" y1=\"" << py(l.h) << "\" x2=\"" << px(l.x)
            << "\" y2=\"" << y << "\" stroke=\"steelblue\" stroke-width=\"1\"/>\n";
        out << "  <line x1=\"" << px(r.x) << "\" y1=\"" << py(r.h) << "\" x2=\"" << px(r.x)
            << "\" y2=\"" << y << "\" stroke=\"steelblue\" stroke-width=\"1\"/>\n";
        out << "  <line x1=\"" << px(l.x) << "\" y1=\"" << y << "\" x2=\"" << px(r.x)
            << "\" y2=\"" << y << "\" stroke=\"steelblue\" stroke-width=\"1\"/>\n";
        plot[n + k] = {(l.x + r.x) / 2.0, m.height};
    }

    out << "  <line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(1) << "\" y2=\""
        << py(0) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    out << "</svg>\n";
}

void render_dendrogram_svg_file(const MergeTree& tree, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    render_dendrogram_svg(tree, out);
}

}  // namespace patchclust
