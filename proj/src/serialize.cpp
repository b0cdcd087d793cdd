#include "transclust/serialize.hpp"

#include <stdexcept>

namespace transclust {

using nlohmann::json;

json to_json(const KMeansConfig& cfg) {
    return {{"k", cfg.k},
            {"restarts", cfg.restarts},
            {"max_iterations", cfg.max_iterations},
            {"seeding", to_string(cfg.seeding)},
            {"seed", cfg.seed}};
}

json to_json(const ClusterAssignment& a) {
    json j{{"labels", a.labels},
           {"k", a.k},
           {"inertia", a.inertia},
           {"iterations", a.iterations},
           {"restarts_used", a.restarts_used}};
    return j;
}

json to_json(const ClusterAssignment& a, Method method, const KMeansConfig& cfg,
             const std::string& metric) {
    json j = to_json(a);
    json config = to_json(cfg);
    config["method"] = to_string(method);
    config["metric"] = metric;
    j["config"] = std::move(config);
    return j;
}

json to_json(const EvalReport& r) {
    json times = json::array();
    for (const auto& t : r.times) times.push_back({{"stage", t.stage}, {"ms", t.ms}});
    return {{"error_rate", r.error_rate},
            {"mismatches", r.mismatches},
            {"n", r.n},
            {"confusion", r.confusion},
            {"matched_confusion", r.matched_confusion},
            {"matched", r.matched},
            {"wall_time_ms", std::move(times)},
            {"config", r.config}};
}

json to_json(const BenchmarkTable& table) {
    json rows = json::array();
    for (const auto& row : table.rows) {
        rows.push_back({{"n", row.n}, {"stage", row.stage}, {"median_ms", row.median_ms}});
    }
    return {{"rows", std::move(rows)}, {"transitive_slope", table.transitive_slope}};
}

Labels labels_from_json(const json& j) {
    if (!j.contains("labels") || !j["labels"].is_array()) {
        throw std::invalid_argument("JSON document has no \"labels\" array");
    }
    return j["labels"].get<Labels>();
}

}  // namespace transclust
