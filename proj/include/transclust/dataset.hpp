#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "transclust/matrix.hpp"

namespace transclust {

using Labels = std::vector<int>;

/// n samples in R^dim with optional ground-truth labels in {0..k-1}.
/// Immutable after construction; the constructor validates every invariant.
class DataSet {
public:
    DataSet(Matrix points, std::optional<Labels> labels = std::nullopt, std::string name = {});

    std::size_t size() const { return points_.rows(); }
    std::size_t dim() const { return points_.cols(); }
    const Matrix& points() const { return points_; }
    std::span<const double> point(std::size_t i) const { return points_.row(i); }

    bool has_labels() const { return labels_.has_value(); }
    const Labels& labels() const;
    /// Number of distinct ground-truth labels (0 when unlabeled).
    int num_classes() const { return num_classes_; }

    const std::string& name() const { return name_; }

private:
    Matrix points_;
    std::optional<Labels> labels_;
    int num_classes_ = 0;
    std::string name_;
};

/// Number of clusters in a contiguous labelling (max label + 1).
int count_labels(const Labels& labels);

/// True when the labels are exactly {0..k-1} with every value used.
bool labels_contiguous(const Labels& labels);

/// Maps arbitrary non-negative labels onto {0..k-1} preserving their order.
Labels relabel_contiguous(const Labels& labels);

// ---------------------------------------------------------------------------
// CSV

struct CsvOptions {
    /// Zero-based column holding the class label; every other column is a
    /// feature. Label cells may be integers or arbitrary strings.
    std::optional<std::size_t> label_column;
};

/// Loads a comma-separated file. A first row that does not parse as numbers
/// is treated as a header. Integer labels that are not already {0..k-1} are
/// remapped, and a note is appended to `warnings` when provided. String labels
/// are numbered in order of first appearance.
DataSet load_csv(const std::filesystem::path& path, const CsvOptions& options = {},
                 std::vector<std::string>* warnings = nullptr);

/// Writes points (and labels as a trailing column when present) with 17
/// significant digits, no header.
void write_csv(const DataSet& data, const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Synthetic generators (all 2-D, inside the open unit square)

enum class Shape { TwoMoon, MultiScaleGaussians, RingsWithNoise, GaussianMixture };

std::string to_string(Shape shape);
Shape parse_shape(const std::string& text);

/// Geometry knobs. Only the fields relevant to the chosen shape are read;
/// SyntheticSpec::defaults() fills in documented values for each shape.
struct ShapeParams {
    // TwoMoon: arc radius, closest distance between the two noise-free arcs,
    // and the standard deviation of the isotropic jitter.
    double moon_radius = 0.25;
    double moon_gap = 0.12;
    double moon_jitter = 0.008;

    // MultiScaleGaussians: two tight clusters side by side, one loose cluster
    // below them. Gaussians are truncated at 2.5 sigma.
    double dense_sigma = 0.01;
    double dense_separation = 0.10;  // centre-to-centre distance of the tight pair
    double sparse_sigma = 0.09;
    double sparse_offset = 0.45;     // vertical distance of the loose cluster below the pair

    // RingsWithNoise: radii of the concentric rings and their radial jitter.
    double ring_radii[2] = {0.12, 0.36};
    double ring_jitter = 0.008;

    // GaussianMixture: per-cluster standard deviation and the minimum distance
    // between randomly placed centres.
    double mixture_sigma = 0.05;
    double mixture_min_separation = 0.3;
};

struct SyntheticSpec {
    Shape shape = Shape::TwoMoon;
    std::vector<int> samples_per_cluster;
    int noise_count = 0;
    std::uint64_t seed = 0;
    ShapeParams params;

    /// Shape-specific defaults: TwoMoon 25+25 (the 50-point set), MultiScale
    /// 80+80+40, Rings 100+200, GaussianMixture 67+67+66.
    static SyntheticSpec defaults(Shape shape, std::uint64_t seed = 0);

    int total() const;
};

/// Generates labelled points. Noise points (RingsWithNoise only) get the label
/// one past the last ring. Throws std::invalid_argument on an invalid spec.
DataSet generate(const SyntheticSpec& spec);

}  // namespace transclust
