// transclust: command-line front end for transitive-distance clustering.
//
//   transclust generate  --shape twomoon --seed 7 --out moons.csv
//   transclust cluster   --input iris.csv --label-col 4 --k 3 --method transitive --out labels.json
//   transclust evaluate  --input iris.csv --label-col 4 --k 3 --method transitive
//   transclust heatmap   --input moons.csv --label-col 2 --order 3 --out d3.svg
//   transclust scatter   --input moons.csv --label-col 2 --k 2 --mst --out moons.svg
//   transclust bench     --sizes 500,1000,2000 --repeats 3
//   transclust duality   --sets 20 --seed 1
//
// Exit codes: 0 success, 1 usage error, 2 data error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "transclust/benchmark.hpp"
#include "transclust/clustering.hpp"
#include "transclust/dataset.hpp"
#include "transclust/distance.hpp"
#include "transclust/error.hpp"
#include "transclust/eval.hpp"
#include "transclust/mst.hpp"
#include "transclust/plot.hpp"
#include "transclust/serialize.hpp"
#include "transclust/transitive.hpp"

namespace tc = transclust;
using nlohmann::json;

namespace {

constexpr int exit_usage = 1;
constexpr int exit_data = 2;

struct RunConfig {
    std::string input;
    std::optional<std::size_t> label_col;
    int k = 2;
    std::string method = "transitive";
    std::string metric = "euclidean";
    std::uint64_t seed = 0;
    int restarts = 10;
    int max_iterations = 100;
    std::string seeding = "plusplus";
    std::optional<std::size_t> order;
    std::string out;
    std::string labels_file;
    std::string mst_out;
    std::string dump_distance;
    bool mst_overlay = false;
    unsigned threads = 0;

    // generate
    std::string shape = "twomoon";
    std::vector<int> samples;
    int noise = 0;

    // bench
    std::vector<std::size_t> sizes{500, 1000, 2000, 4000};
    int repeats = 3;
    bool bench_kmeans = false;
    std::string json_out;

    // duality
    int sets = 20;
};

unsigned threads_from_env() {
    if (const char* env = std::getenv("TRANSCLUST_THREADS")) {
        try {
            return static_cast<unsigned>(std::stoul(env));
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring invalid TRANSCLUST_THREADS='" << env << "'\n";
        }
    }
    return 0;
}

tc::KMeansConfig kmeans_config(const RunConfig& rc) {
    tc::KMeansConfig cfg;
    cfg.k = rc.k;
    cfg.restarts = rc.restarts;
    cfg.max_iterations = rc.max_iterations;
    cfg.seeding = tc::parse_seeding(rc.seeding);
    cfg.seed = rc.seed;
    cfg.threads = rc.threads;
    return cfg;
}

tc::DataSet load_input(const RunConfig& rc) {
    std::vector<std::string> warnings;
    auto data = tc::load_csv(rc.input, {rc.label_col}, &warnings);
    for (const auto& w : warnings) std::cerr << "note: " << w << '\n';
    return data;
}

// Writes to --out when given, stdout otherwise.
void emit_text(const RunConfig& rc, const std::string& text) {
    if (rc.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(rc.out);
    if (!out) throw tc::data_error("cannot write " + rc.out);
    out << text;
}

int cmd_generate(const RunConfig& rc) {
    auto spec = tc::SyntheticSpec::defaults(tc::parse_shape(rc.shape), rc.seed);
    if (!rc.samples.empty()) spec.samples_per_cluster = rc.samples;
    spec.noise_count = rc.noise;
    auto data = tc::generate(spec);
    if (rc.out.empty()) throw std::invalid_argument("generate needs --out");
    tc::write_csv(data, rc.out);
    std::cerr << "wrote " << data.size() << " samples in " << data.num_classes() << " clusters to "
              << rc.out << '\n';
    return 0;
}

int cmd_cluster(const RunConfig& rc) {
    const auto data = load_input(rc);
    const auto metric = tc::parse_metric(rc.metric);
    if (!rc.dump_distance.empty()) {
        tc::write_matrix_text(tc::build_distance_matrix(data, metric, rc.threads).values,
                              std::filesystem::path(rc.dump_distance));
    }
    if (!rc.mst_out.empty()) {
        std::ofstream out(rc.mst_out);
        if (!out) throw tc::data_error("cannot write " + rc.mst_out);
        tc::write_edge_list(tc::build_mst(tc::build_distance_matrix(data, metric, rc.threads)), out);
    }
    const auto cfg = kmeans_config(rc);
    const auto method = tc::parse_method(rc.method);
    const auto result = tc::run_method(method, data, cfg, metric);
    emit_text(rc, tc::to_json(result, method, cfg, rc.metric).dump(2) + "\n");
    return 0;
}

int cmd_evaluate(const RunConfig& rc) {
    const auto data = load_input(rc);
    if (!data.has_labels()) throw tc::data_error("evaluate needs --label-col");
    const auto metric = tc::parse_metric(rc.metric);
    const auto cfg = kmeans_config(rc);
    const auto method = tc::parse_method(rc.method);

    tc::StageTimes times;
    tc::Labels predicted;
    if (!rc.labels_file.empty()) {
        std::ifstream in(rc.labels_file);
        if (!in) throw tc::data_error("cannot open " + rc.labels_file);
        predicted = tc::labels_from_json(json::parse(in));
    } else {
        predicted = tc::run_method(method, data, cfg, metric, &times).labels;
    }
    auto report = tc::error_rate(predicted, data.labels());
    report.times = std::move(times);
    json config = tc::to_json(cfg);
    config["method"] = rc.labels_file.empty() ? rc.method : "file:" + rc.labels_file;
    config["metric"] = rc.metric;
    config["input"] = rc.input;
    report.config = config.dump();
    json j = tc::to_json(report);
    j["config"] = config;
    emit_text(rc, j.dump(2) + "\n");
    return 0;
}

int cmd_heatmap(const RunConfig& rc) {
    const auto data = load_input(rc);
    if (rc.out.empty()) throw std::invalid_argument("heatmap needs --out");
    const auto e = tc::build_distance_matrix(data, tc::parse_metric(rc.metric), rc.threads);
    // Order 1 draws the raw distances; no --order draws the full transitive matrix.
    if (rc.order && *rc.order == 1) {
        tc::emit_heatmap(e.values, rc.out);
    } else if (rc.order) {
        tc::emit_heatmap(tc::order_k_distance(e, *rc.order, rc.threads).values(), rc.out);
    } else {
        tc::emit_heatmap(tc::forest_cut(tc::build_mst(e)).values(), rc.out);
    }
    return 0;
}

int cmd_scatter(const RunConfig& rc) {
    const auto data = load_input(rc);
    if (rc.out.empty()) throw std::invalid_argument("scatter needs --out");
    const auto metric = tc::parse_metric(rc.metric);
    tc::Labels labels;
    if (!rc.labels_file.empty()) {
        std::ifstream in(rc.labels_file);
        if (!in) throw tc::data_error("cannot open " + rc.labels_file);
        labels = tc::labels_from_json(json::parse(in));
    } else if (data.has_labels() && rc.method == "truth") {
        labels = data.labels();
    } else {
        labels = tc::run_method(tc::parse_method(rc.method), data, kmeans_config(rc), metric).labels;
    }
    std::optional<tc::SpanningTree> tree;
    tc::ScatterOptions options;
    if (rc.mst_overlay) {
        tree = tc::build_mst(tc::build_distance_matrix(data, metric, rc.threads));
        options.mst = &*tree;
    }
    tc::emit_scatter(data, labels, std::filesystem::path(rc.out), options);
    return 0;
}

int cmd_bench(const RunConfig& rc) {
    tc::BenchmarkOptions options;
    options.sizes = rc.sizes;
    options.repeats = rc.repeats;
    options.include_kmeans = rc.bench_kmeans;
    options.generator.seed = rc.seed;
    options.kmeans.seed = rc.seed;
    options.threads = rc.threads == 0 ? 1 : rc.threads;
    const auto table = tc::scaling_benchmark(options);
    std::ostringstream csv;
    tc::write_benchmark_csv(table, csv);
    emit_text(rc, csv.str());
    std::cout << "slope(distance+mst+forest_cut) = " << table.transitive_slope << '\n';
    if (!rc.json_out.empty()) {
        std::ofstream out(rc.json_out);
        if (!out) throw tc::data_error("cannot write " + rc.json_out);
        out << tc::to_json(table).dump(2) << '\n';
    }
    return 0;
}

int cmd_duality(const RunConfig& rc) {
    const auto metric = tc::parse_metric(rc.metric);
    auto cfg = kmeans_config(rc);
    json result;
    if (!rc.input.empty()) {
        const auto data = load_input(rc);
        result["difference"] = tc::duality_difference(data, cfg, metric);
    } else {
        cfg.k = 3;
        std::vector<double> diffs;
        double sum = 0.0;
        for (int s = 0; s < rc.sets; ++s) {
            auto spec = tc::SyntheticSpec::defaults(tc::Shape::GaussianMixture,
                                                    rc.seed + static_cast<std::uint64_t>(s));
            cfg.seed = rc.seed + static_cast<std::uint64_t>(s);
            diffs.push_back(tc::duality_difference(tc::generate(spec), cfg, metric));
            sum += diffs.back();
        }
        result["differences"] = diffs;
        result["mean"] = diffs.empty() ? 0.0 : sum / static_cast<double>(diffs.size());
    }
    emit_text(rc, result.dump(2) + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Transitive-distance clustering via minimum spanning trees and K-means"};
    app.require_subcommand(1);
    RunConfig rc;
    rc.threads = threads_from_env();

    const std::vector<std::string> methods{"transitive", "kmeans", "hierarchical", "duality-raw"};
    const std::vector<std::string> metrics{"euclidean", "manhattan", "cosine"};

    auto add_input = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("--input", rc.input, "CSV file of samples")->check(CLI::ExistingFile);
        if (required) opt->required();
        sub->add_option("--label-col", rc.label_col, "zero-based column holding class labels");
        sub->add_option("--metric", rc.metric, "distance metric")->check(CLI::IsMember(metrics));
        sub->add_option("--threads", rc.threads, "worker threads (0 = all cores)");
    };
    auto add_kmeans = [&](CLI::App* sub) {
        sub->add_option("--k", rc.k, "number of clusters")->check(CLI::PositiveNumber);
        sub->add_option("--seed", rc.seed, "random seed");
        sub->add_option("--restarts", rc.restarts, "K-means restarts")->check(CLI::PositiveNumber);
        sub->add_option("--max-iter", rc.max_iterations, "K-means iteration cap")
            ->check(CLI::PositiveNumber);
        sub->add_option("--seeding", rc.seeding, "K-means initialisation")
            ->check(CLI::IsMember({"plusplus", "random-partition"}));
    };

    auto* generate = app.add_subcommand("generate", "write a synthetic labelled data set");
    generate->add_option("--shape", rc.shape, "twomoon, multiscale, rings or gmm")
        ->check(CLI::IsMember({"twomoon", "multiscale", "rings", "gmm"}));
    generate->add_option("--samples", rc.samples, "samples per cluster")->delimiter(',');
    generate->add_option("--noise", rc.noise, "uniform noise points (rings only)");
    generate->add_option("--seed", rc.seed, "random seed");
    generate->add_option("--out", rc.out, "output CSV")->required();

    auto* cluster = app.add_subcommand("cluster", "cluster a CSV file and write labels as JSON");
    add_input(cluster, true);
    add_kmeans(cluster);
    cluster->add_option("--method", rc.method, "clustering method")->check(CLI::IsMember(methods));
    cluster->add_option("--out", rc.out, "output JSON (stdout when omitted)");
    cluster->add_option("--mst", rc.mst_out, "also write the MST edge list to this file");
    cluster->add_option("--dump-distance", rc.dump_distance, "also write the distance matrix as text");

    auto* evaluate = app.add_subcommand("evaluate", "score a clustering against ground truth");
    add_input(evaluate, true);
    add_kmeans(evaluate);
    evaluate->add_option("--method", rc.method, "clustering method")->check(CLI::IsMember(methods));
    evaluate->add_option("--labels", rc.labels_file, "score labels from a cluster JSON instead");
    evaluate->add_option("--out", rc.out, "output JSON (stdout when omitted)");

    auto* heatmap = app.add_subcommand("heatmap", "draw a (transitive) distance matrix");
    add_input(heatmap, true);
    heatmap->add_option("--order", rc.order,
                        "path vertex limit k (1 = raw distances; omit for the full transitive matrix)")
        ->check(CLI::PositiveNumber);
    heatmap->add_option("--out", rc.out, "output .svg or .pgm")->required();

    auto* scatter = app.add_subcommand("scatter", "draw a 2-D clustering as SVG");
    add_input(scatter, true);
    add_kmeans(scatter);
    scatter->add_option("--method", rc.method, "clustering method, or 'truth' for the label column")
        ->check(CLI::IsMember({"transitive", "kmeans", "hierarchical", "duality-raw", "truth"}));
    scatter->add_option("--labels", rc.labels_file, "labels from a cluster JSON");
    scatter->add_flag("--mst", rc.mst_overlay, "overlay the minimum spanning tree");
    scatter->add_option("--out", rc.out, "output SVG")->required();

    auto* bench = app.add_subcommand("bench", "time the pipeline stages over growing n");
    bench->add_option("--sizes", rc.sizes, "sample counts, ascending")->delimiter(',');
    bench->add_option("--repeats", rc.repeats, "runs per size (median reported)")
        ->check(CLI::PositiveNumber);
    bench->add_option("--seed", rc.seed, "random seed");
    bench->add_option("--threads", rc.threads, "worker threads (default 1 for stable timing)");
    bench->add_flag("--kmeans", rc.bench_kmeans, "also time K-means on the transitive rows");
    bench->add_option("--out", rc.out, "CSV output (stdout when omitted)");
    bench->add_option("--json", rc.json_out, "also write the table as JSON");

    auto* duality = app.add_subcommand("duality", "K-means on samples vs on distance-matrix rows");
    add_input(duality, false);
    add_kmeans(duality);
    duality->add_option("--sets", rc.sets, "generated Gaussian mixtures when no --input")
        ->check(CLI::PositiveNumber);
    duality->add_option("--out", rc.out, "output JSON (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e, std::cerr, std::cerr);
        std::cerr << app.help();
        return exit_usage;
    }

    try {
        if (*generate) return cmd_generate(rc);
        if (*cluster) return cmd_cluster(rc);
        if (*evaluate) return cmd_evaluate(rc);
        if (*heatmap) return cmd_heatmap(rc);
        if (*scatter) return cmd_scatter(rc);
        if (*bench) return cmd_bench(rc);
        if (*duality) return cmd_duality(rc);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_data;
    }
    return exit_usage;
}
