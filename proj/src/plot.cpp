#include "transclust/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "transclust/error.hpp"

namespace transclust {

namespace {

constexpr const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                                   "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.5f", v);
    return buf;
}

std::ofstream open_for_write(const std::filesystem::path& path, bool binary = false) {
    std::ofstream out(path, binary ? std::ios::binary : std::ios::out);
    if (!out) throw data_error("cannot write " + path.string());
    return out;
}

int grey_level(double v, double max_v) {
    double intensity = max_v > 0.0 ? 1.0 - v / max_v : 1.0;
    return static_cast<int>(std::lround(255.0 * std::clamp(intensity, 0.0, 1.0)));
}

double max_entry(const Matrix& m) {
    double top = 0.0;
    for (double v : m.values()) top = std::max(top, v);
    return top;
}

}  // namespace

void emit_scatter(const DataSet& data, const Labels& labels, std::ostream& out,
                  const ScatterOptions& options) {
    if (data.dim() != 2) {
        throw std::invalid_argument("scatter plots need 2-D data (got " +
                                    std::to_string(data.dim()) +
                                    " features); use the heatmap command instead");
    }
    if (labels.size() != data.size()) {
        throw std::invalid_argument("label count does not match the number of samples");
    }
    // y grows upwards in data space and downwards in SVG.
    auto sx = [&](std::size_t i) { return fmt(data.point(i)[0]); };
    auto sy = [&](std::size_t i) { return fmt(1.0 - data.point(i)[1]); };

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.size_px << "\" height=\""
        << options.size_px << "\" viewBox=\"0 0 1 1\">\n"
        << "<rect x=\"0\" y=\"0\" width=\"1\" height=\"1\" fill=\"white\"/>\n";
    if (options.mst) {
        out << "<g stroke=\"#555555\" stroke-width=\"0.002\">\n";
        for (const auto& e : options.mst->edges) {
            out << "<line x1=\"" << sx(e.u) << "\" y1=\"" << sy(e.u) << "\" x2=\"" << sx(e.v)
                << "\" y2=\"" << sy(e.v) << "\"/>\n";
        }
        out << "</g>\n";
    }
    for (std::size_t i = 0; i < data.size(); ++i) {
        const char* color = palette[static_cast<std::size_t>(labels[i]) % std::size(palette)];
        out << "<circle cx=\"" << sx(i) << "\" cy=\"" << sy(i) << "\" r=\"0.006\" fill=\"" << color
            << "\"/>\n";
    }
    out << "</svg>\n";
}

void emit_scatter(const DataSet& data, const Labels& labels, const std::filesystem::path& path,
                  const ScatterOptions& options) {
    auto out = open_for_write(path);
    emit_scatter(data, labels, out, options);
}

void emit_heatmap_svg(const Matrix& m, std::ostream& out, double size_px) {
    const std::size_t n = m.rows();
    const double top = max_entry(m);
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size_px << "\" height=\""
        << size_px << "\" viewBox=\"0 0 " << n << ' ' << n
        << "\" shape-rendering=\"crispEdges\">\n";
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            int g = grey_level(m(i, j), top);
            out << "<rect x=\"" << j << "\" y=\"" << i << "\" width=\"1\" height=\"1\" fill=\"rgb("
                << g << ',' << g << ',' << g << ")\"/>\n";
        }
    }
    out << "</svg>\n";
}

void emit_heatmap_pgm(const Matrix& m, std::ostream& out) {
    const double top = max_entry(m);
    out << "P5\n" << m.cols() << ' ' << m.rows() << "\n255\n";
    for (double v : m.values()) out.put(static_cast<char>(grey_level(v, top)));
}

void emit_heatmap(const Matrix& m, const std::filesystem::path& path) {
    if (path.extension() == ".pgm") {
        auto out = open_for_write(path, true);
        emit_heatmap_pgm(m, out);
    } else {
        auto out = open_for_write(path);
        emit_heatmap_svg(m, out);
    }
}

}  // namespace transclust
