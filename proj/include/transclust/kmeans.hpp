#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "transclust/dataset.hpp"
#include "transclust/matrix.hpp"

namespace transclust {

enum class Seeding { PlusPlus, RandomPartition };

std::string to_string(Seeding seeding);
Seeding parse_seeding(const std::string& text);

struct KMeansConfig {
    int k = 2;
    int restarts = 10;
    int max_iterations = 100;
    Seeding seeding = Seeding::PlusPlus;
    std::uint64_t seed = 0;
    /// Workers for independent restarts (0 = all cores). The result does not
    /// depend on this value.
    unsigned threads = 1;
};

/// Labels in {0..k-1}, every cluster non-empty, centroids in the row space of
/// the clustered matrix.
struct ClusterAssignment {
    Labels labels;
    int k = 0;
    Matrix centroids;  // k x m; empty for methods without centroids
    double inertia = 0.0;
    int iterations = 0;
    int restarts_used = 0;
    /// Cost after each assignment step of the winning restart.
    std::vector<double> inertia_trace;
};

/// Lloyd's algorithm, best of cfg.restarts by inertia.
///
/// Iterates until the assignment no longer changes or max_iterations is
/// reached. A cluster left empty is reseeded at the point farthest from its
/// own centroid. Restart r draws from stream Rng::split(cfg.seed, r) and ties
/// in inertia go to the lower restart, so results are identical for any
/// thread count.
ClusterAssignment kmeans(const Matrix& rows, const KMeansConfig& cfg);

/// Sum of squared distances from each row to its assigned centroid.
double compute_inertia(const Matrix& rows, const Labels& labels, const Matrix& centroids);

}  // namespace transclust
