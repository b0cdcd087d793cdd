#pragma once

#include <filesystem>
#include <iosfwd>

#include "transclust/dataset.hpp"
#include "transclust/matrix.hpp"
#include "transclust/mst.hpp"

namespace transclust {

struct ScatterOptions {
    const SpanningTree* mst = nullptr;  // overlay tree edges when set
    double size_px = 600.0;
};

/// Colored scatter of a 2-D data set in a unit-square view box, one fill
/// color per cluster label. Emits one <circle> per sample and, with an MST
/// overlay, one <line> per tree edge. Throws std::invalid_argument when the
/// data is not 2-D or the label count does not match.
void emit_scatter(const DataSet& data, const Labels& labels, std::ostream& out,
                  const ScatterOptions& options = {});
void emit_scatter(const DataSet& data, const Labels& labels, const std::filesystem::path& path,
                  const ScatterOptions& options = {});

/// Grey-level map of a square matrix, one cell per entry with intensity
/// 1 - v / max(v): small distances are bright.
void emit_heatmap_svg(const Matrix& m, std::ostream& out, double size_px = 600.0);
/// Binary PGM (P5) variant for large n, one pixel per entry.
void emit_heatmap_pgm(const Matrix& m, std::ostream& out);
/// Picks PGM for a ".pgm" extension and SVG otherwise.
void emit_heatmap(const Matrix& m, const std::filesystem::path& path);

}  // namespace transclust
