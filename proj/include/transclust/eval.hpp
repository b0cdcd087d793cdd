#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "transclust/clustering.hpp"
#include "transclust/dataset.hpp"
#include "transclust/distance.hpp"
#include "transclust/kmeans.hpp"

namespace transclust {

/// Scoring of a predicted labelling against ground truth.
///
/// Predicted labels are matched one-to-one to true labels so that agreement
/// is maximal. When the two label counts differ the confusion matrix is padded
/// with empty rows/columns up to K = max(k_pred, k_true).
struct EvalReport {
    double error_rate = 0.0;
    std::size_t mismatches = 0;
    std::size_t n = 0;
    /// confusion[t][p]: samples with true label t and predicted label p,
    /// where predicted label p is matched to true label matched[p].
    std::vector<std::vector<std::size_t>> confusion;
    /// Same counts with predicted columns reordered by their matched truth,
    /// so the diagonal holds the agreements.
    std::vector<std::vector<std::size_t>> matched_confusion;
    std::vector<std::size_t> matched;  // predicted label -> true label
    StageTimes times;
    std::string config;  // free-form echo of the run configuration
};

/// Throws std::invalid_argument on a length mismatch or negative labels.
EvalReport error_rate(const Labels& predicted, const Labels& truth);

struct ConsistencyWitness {
    int cluster = 0;
    /// Largest edge of the cluster's own MST: the widest gap over all
    /// bipartitions C = C1 u C2.
    double partition_gap = 0.0;
    std::size_t outside_point = 0;
    /// d(y, C); consistency needs partition_gap < outside_distance.
    double outside_distance = 0.0;
};

struct ConsistencyResult {
    bool consistent = true;
    std::optional<ConsistencyWitness> witness;
};

/// Decides whether the labelling is consistent with the distance: for every
/// cluster C, every bipartition gap d(C1, C2) is strictly smaller than d(y, C)
/// for every y outside C. Uses the per-cluster MST bottleneck, O(n^2).
ConsistencyResult check_consistency(const DistanceMatrix& distances, const Labels& labels);

/// Convenience overload; throws data_error when `data` has no labels.
ConsistencyResult check_consistency(const DataSet& data, Metric metric = Metric::Euclidean);

/// Fraction of samples labelled differently by K-means on the coordinates and
/// K-means on the rows of E, after optimal label matching.
double duality_difference(const DataSet& data, const KMeansConfig& cfg,
                          Metric metric = Metric::Euclidean);

}  // namespace transclust
