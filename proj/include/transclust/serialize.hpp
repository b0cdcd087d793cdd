#pragma once

#include <json.hpp>

#include "transclust/benchmark.hpp"
#include "transclust/clustering.hpp"
#include "transclust/eval.hpp"
#include "transclust/kmeans.hpp"

namespace transclust {

nlohmann::json to_json(const KMeansConfig& cfg);
nlohmann::json to_json(const ClusterAssignment& assignment);
/// Assignment plus the configuration that produced it.
nlohmann::json to_json(const ClusterAssignment& assignment, Method method,
                       const KMeansConfig& cfg, const std::string& metric);
nlohmann::json to_json(const EvalReport& report);
nlohmann::json to_json(const BenchmarkTable& table);

/// Reads the "labels" array of a serialized assignment.
Labels labels_from_json(const nlohmann::json& j);

}  // namespace transclust
