#include "transclust/eval.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "transclust/assignment.hpp"
#include "transclust/error.hpp"

namespace transclust {

EvalReport error_rate(const Labels& predicted, const Labels& truth) {
    if (predicted.size() != truth.size()) {
        throw std::invalid_argument("label vectors differ in length (" +
                                    std::to_string(predicted.size()) + " vs " +
                                    std::to_string(truth.size()) + ")");
    }
    auto negative = [](int l) { return l < 0; };
    if (std::any_of(predicted.begin(), predicted.end(), negative) ||
        std::any_of(truth.begin(), truth.end(), negative)) {
        throw std::invalid_argument("labels must be non-negative");
    }

    const std::size_t n = truth.size();
    const auto k = static_cast<std::size_t>(std::max(count_labels(predicted), count_labels(truth)));

    EvalReport report;
    report.n = n;
    report.confusion.assign(k, std::vector<std::size_t>(k, 0));
    for (std::size_t i = 0; i < n; ++i) {
        ++report.confusion[static_cast<std::size_t>(truth[i])][static_cast<std::size_t>(predicted[i])];
    }

    // Maximise agreement = minimise negated counts.
    std::vector<std::vector<double>> cost(k, std::vector<double>(k));
    for (std::size_t p = 0; p < k; ++p) {
        for (std::size_t t = 0; t < k; ++t) cost[p][t] = -static_cast<double>(report.confusion[t][p]);
    }
    report.matched = solve_assignment(cost);

    std::size_t agree = 0;
    report.matched_confusion.assign(k, std::vector<std::size_t>(k, 0));
    for (std::size_t t = 0; t < k; ++t) {
        for (std::size_t p = 0; p < k; ++p) {
            report.matched_confusion[t][report.matched[p]] = report.confusion[t][p];
        }
    }
    for (std::size_t p = 0; p < k; ++p) agree += report.confusion[report.matched[p]][p];
    report.mismatches = n - agree;
    report.error_rate = n == 0 ? 0.0 : static_cast<double>(report.mismatches) / static_cast<double>(n);
    return report;
}

namespace {

// Largest edge of the minimum spanning tree over `members` (Prim, O(m^2)).
double bottleneck(const DistanceMatrix& d, const std::vector<std::size_t>& members) {
    const std::size_t m = members.size();
    if (m < 2) return 0.0;
    std::vector<double> link(m, std::numeric_limits<double>::infinity());
    std::vector<bool> done(m, false);
    double widest = 0.0;
    std::size_t current = 0;
    done[0] = true;
    for (std::size_t step = 1; step < m; ++step) {
        std::size_t next = m;
        for (std::size_t a = 0; a < m; ++a) {
            if (done[a]) continue;
            link[a] = std::min(link[a], d(members[current], members[a]));
            if (next == m || link[a] < link[next]) next = a;
        }
        widest = std::max(widest, link[next]);
        done[next] = true;
        current = next;
    }
    return widest;
}

}  // namespace

ConsistencyResult check_consistency(const DistanceMatrix& distances, const Labels& labels) {
    const std::size_t n = distances.size();
    if (labels.size() != n) throw std::invalid_argument("label count does not match matrix size");
    if (!labels_contiguous(labels)) throw std::invalid_argument("labels must cover {0..k-1}");

    const int k = count_labels(labels);
    std::vector<std::vector<std::size_t>> members(static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < n; ++i) members[static_cast<std::size_t>(labels[i])].push_back(i);

    for (int c = 0; c < k; ++c) {
        const auto& cluster = members[static_cast<std::size_t>(c)];
        // A single sample admits no bipartition.
        if (cluster.size() < 2) continue;
        const double gap = bottleneck(distances, cluster);
        for (std::size_t y = 0; y < n; ++y) {
            if (labels[y] == c) continue;
            double to_cluster = std::numeric_limits<double>::infinity();
            for (std::size_t x : cluster) to_cluster = std::min(to_cluster, distances(y, x));
            if (!(gap < to_cluster)) {
                return {false, ConsistencyWitness{c, gap, y, to_cluster}};
            }
        }
    }
    return {true, std::nullopt};
}

ConsistencyResult check_consistency(const DataSet& data, Metric metric) {
    if (!data.has_labels()) throw data_error("consistency check needs ground-truth labels");
    return check_consistency(build_distance_matrix(data, metric), data.labels());
}

double duality_difference(const DataSet& data, const KMeansConfig& cfg, Metric metric) {
    auto direct = cluster_kmeans_baseline(data, cfg);
    auto raw = cluster_duality_raw(data, cfg, metric);
    return error_rate(raw.labels, direct.labels).error_rate;
}

}  // namespace transclust
