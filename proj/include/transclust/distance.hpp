#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>

#include "transclust/dataset.hpp"
#include "transclust/matrix.hpp"

namespace transclust {

enum class Metric { Euclidean, Manhattan, Cosine };

std::string to_string(Metric metric);
Metric parse_metric(const std::string& text);

/// Symmetric n x n matrix with zero diagonal and finite non-negative entries.
/// Dense storage; memory is 8 n^2 bytes, so n around 20000 is the practical
/// ceiling (3.2 GB).
struct DistanceMatrix {
    Matrix values;
    std::string metric;

    std::size_t size() const { return values.rows(); }
    double operator()(std::size_t i, std::size_t j) const { return values(i, j); }
};

/// Pairwise distance between two points under `metric`. Cosine distance is
/// 1 - cos(a, b) clamped to [0, 2]; the caller guarantees non-zero vectors.
double pair_distance(std::span<const double> a, std::span<const double> b, Metric metric);

/// Builds E from the samples. Only the upper triangle is evaluated and then
/// mirrored, so the result is bitwise symmetric. Rows are distributed over
/// `threads` workers (0 = all cores).
/// Throws data_error naming the sample when Cosine meets a zero vector.
DistanceMatrix build_distance_matrix(const DataSet& data, Metric metric, unsigned threads = 1);

/// Wraps an explicit matrix after checking the DistanceMatrix invariants.
DistanceMatrix make_distance_matrix(Matrix values, std::string metric = "custom");

/// Plain-text dump: one row per line, space separated, 17 significant digits.
void write_matrix_text(const Matrix& m, std::ostream& out);
void write_matrix_text(const Matrix& m, const std::filesystem::path& path);

}  // namespace transclust
