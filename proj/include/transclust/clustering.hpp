#pragma once

#include <string>
#include <vector>

#include "transclust/dataset.hpp"
#include "transclust/distance.hpp"
#include "transclust/kmeans.hpp"
#include "transclust/mst.hpp"

namespace transclust {

enum class Method { Transitive, KMeans, Hierarchical, DualityRaw };

std::string to_string(Method method);
Method parse_method(const std::string& text);

/// Wall time of one pipeline stage in milliseconds.
struct StageTime {
    std::string stage;
    double ms = 0.0;
};

using StageTimes = std::vector<StageTime>;

/// Transitive-distance clustering: E -> MST -> forest cut -> K-means on the
/// rows of E'. The label of row i is the label of sample i. cfg.k is used as
/// the cluster count.
ClusterAssignment cluster_transitive(const DataSet& data, const KMeansConfig& cfg,
                                     Metric metric = Metric::Euclidean,
                                     StageTimes* times = nullptr);

/// K-means on the rows of the raw distance matrix E (no transitive step).
ClusterAssignment cluster_duality_raw(const DataSet& data, const KMeansConfig& cfg,
                                      Metric metric = Metric::Euclidean,
                                      StageTimes* times = nullptr);

/// Plain K-means on the sample coordinates.
ClusterAssignment cluster_kmeans_baseline(const DataSet& data, const KMeansConfig& cfg,
                                          StageTimes* times = nullptr);

/// Single-linkage clustering: delete the c - 1 heaviest MST edges (edge_less
/// order) and label the connected components, numbered by their smallest
/// sample index. No centroids; inertia is reported as 0.
ClusterAssignment cluster_hierarchical_mstcut(const DataSet& data, int c,
                                              Metric metric = Metric::Euclidean,
                                              StageTimes* times = nullptr);

/// Component labels after removing the c - 1 heaviest edges of `tree`.
Labels cut_tree(const SpanningTree& tree, int c);

/// Dispatch by method; `cfg.k` doubles as c for the hierarchical method.
ClusterAssignment run_method(Method method, const DataSet& data, const KMeansConfig& cfg,
                             Metric metric = Metric::Euclidean, StageTimes* times = nullptr);

}  // namespace transclust
