#include "transclust/clustering.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>

#include "transclust/transitive.hpp"

namespace transclust {

std::string to_string(Method method) {
    switch (method) {
        case Method::Transitive: return "transitive";
        case Method::KMeans: return "kmeans";
        case Method::Hierarchical: return "hierarchical";
        case Method::DualityRaw: return "duality-raw";
    }
    return "unknown";
}

Method parse_method(const std::string& text) {
    for (Method m : {Method::Transitive, Method::KMeans, Method::Hierarchical, Method::DualityRaw}) {
        if (text == to_string(m)) return m;
    }
    throw std::invalid_argument("unknown method '" + text +
                                "' (expected transitive, kmeans, hierarchical or duality-raw)");
}

namespace {

template <class Fn>
auto timed(StageTimes* times, const char* stage, Fn&& fn) {
    auto start = std::chrono::steady_clock::now();
    auto result = fn();
    if (times) {
        std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
        times->push_back({stage, ms.count()});
    }
    return result;
}

void check_k(const DataSet& data, int k) {
    if (k < 1) throw std::invalid_argument("number of clusters must be at least 1");
    if (static_cast<std::size_t>(k) > data.size()) {
        throw std::invalid_argument("number of clusters " + std::to_string(k) +
                                    " exceeds the sample count " + std::to_string(data.size()));
    }
}

}  // namespace

ClusterAssignment cluster_transitive(const DataSet& data, const KMeansConfig& cfg, Metric metric,
                                     StageTimes* times) {
    check_k(data, cfg.k);
    auto e = timed(times, "distance", [&] { return build_distance_matrix(data, metric, cfg.threads); });
    auto tree = timed(times, "mst", [&] { return build_mst(e); });
    auto transitive = timed(times, "forest_cut", [&] { return forest_cut(tree); });
    return timed(times, "kmeans", [&] { return kmeans(transitive.values(), cfg); });
}

ClusterAssignment cluster_duality_raw(const DataSet& data, const KMeansConfig& cfg, Metric metric,
                                      StageTimes* times) {
    check_k(data, cfg.k);
    auto e = timed(times, "distance", [&] { return build_distance_matrix(data, metric, cfg.threads); });
    return timed(times, "kmeans", [&] { return kmeans(e.values, cfg); });
}

ClusterAssignment cluster_kmeans_baseline(const DataSet& data, const KMeansConfig& cfg,
                                          StageTimes* times) {
    check_k(data, cfg.k);
    return timed(times, "kmeans", [&] { return kmeans(data.points(), cfg); });
}

Labels cut_tree(const SpanningTree& tree, int c) {
    if (c < 1 || static_cast<std::size_t>(c) > tree.n) {
        throw std::invalid_argument("cluster count " + std::to_string(c) + " must lie in [1, " +
                                    std::to_string(tree.n) + "]");
    }
    std::vector<Edge> kept = tree.edges;
    std::sort(kept.begin(), kept.end(), edge_less);
    kept.resize(kept.size() - static_cast<std::size_t>(c - 1));

    UnionFind sets(tree.n);
    for (const auto& e : kept) sets.unite(e.u, e.v);

    // Number components by their smallest member.
    Labels labels(tree.n, -1);
    std::vector<int> root_label(tree.n, -1);
    int next = 0;
    for (std::size_t i = 0; i < tree.n; ++i) {
        auto root = sets.find(i);
        if (root_label[root] < 0) root_label[root] = next++;
        labels[i] = root_label[root];
    }
    return labels;
}

ClusterAssignment cluster_hierarchical_mstcut(const DataSet& data, int c, Metric metric,
                                              StageTimes* times) {
    check_k(data, c);
    auto e = timed(times, "distance", [&] { return build_distance_matrix(data, metric); });
    auto tree = timed(times, "mst", [&] { return build_mst(e); });
    ClusterAssignment out;
    out.labels = timed(times, "cut", [&] { return cut_tree(tree, c); });
    out.k = c;
    return out;
}

ClusterAssignment run_method(Method method, const DataSet& data, const KMeansConfig& cfg,
                             Metric metric, StageTimes* times) {
    switch (method) {
        case Method::Transitive: return cluster_transitive(data, cfg, metric, times);
        case Method::KMeans: return cluster_kmeans_baseline(data, cfg, times);
        case Method::Hierarchical: return cluster_hierarchical_mstcut(data, cfg.k, metric, times);
        case Method::DualityRaw: return cluster_duality_raw(data, cfg, metric, times);
    }
    throw std::invalid_argument("unknown method");
}

}  // namespace transclust
