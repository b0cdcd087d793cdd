#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "transclust/dataset.hpp"
#include "transclust/kmeans.hpp"

namespace transclust {

struct BenchmarkOptions {
    std::vector<std::size_t> sizes;
    /// Shape and geometry; samples_per_cluster is rescaled to each size while
    /// keeping the cluster proportions.
    SyntheticSpec generator = SyntheticSpec::defaults(Shape::GaussianMixture);
    int repeats = 3;
    bool include_kmeans = true;
    KMeansConfig kmeans{.k = 3, .restarts = 1, .max_iterations = 100};
    /// Worker count for the distance and K-means kernels. Timing runs default
    /// to one thread so the measured scaling is not blurred by scheduling.
    unsigned threads = 1;
};

struct BenchmarkRow {
    std::size_t n = 0;
    std::string stage;  // distance, mst, forest_cut, kmeans, transitive_total
    double median_ms = 0.0;
};

struct BenchmarkTable {
    std::vector<BenchmarkRow> rows;
    /// Least-squares slope of log(ms) against log(n) for
    /// distance + mst + forest_cut.
    double transitive_slope = 0.0;

    double median(std::size_t n, const std::string& stage) const;
};

/// Times each stage separately. Throws std::invalid_argument unless there
/// are at least three strictly increasing sizes.
BenchmarkTable scaling_benchmark(const BenchmarkOptions& options);

/// Least-squares slope of log(y) on log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

/// "n,stage,ms" rows with a header line.
void write_benchmark_csv(const BenchmarkTable& table, std::ostream& out);

}  // namespace transclust
