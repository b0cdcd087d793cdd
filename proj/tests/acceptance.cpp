// Acceptance checks. Each criterion prints one line:
//   PASS AC<n> <summary>
//   FAIL AC<n> <summary>
// Run without arguments for all criteria, or with criterion ids.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "transclust/benchmark.hpp"
#include "transclust/clustering.hpp"
#include "transclust/eval.hpp"
#include "transclust/transitive.hpp"

namespace fs = std::filesystem;
using namespace transclust;

namespace {

const fs::path data_dir = TRANSCLUST_DATA_DIR;

struct Outcome {
    bool pass = true;
    std::string detail;
};

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt(const char* pattern, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, pattern, args...);
    return buf;
}

// The 50 random datasets shared by criteria 1 and 2.
std::vector<DistanceMatrix> random_instances() {
    std::mt19937_64 gen(20240601);
    std::vector<DistanceMatrix> out;
    for (int t = 0; t < 50; ++t) {
        const std::size_t n = 10 + gen() % 191;  // 10..200
        const std::size_t l = 2 + gen() % 7;     // 2..8
        out.push_back(build_distance_matrix(oracle::random_points(n, l, gen()), Metric::Euclidean));
    }
    return out;
}

// max intra-cluster and min inter-cluster value of a square matrix.
std::pair<double, double> intra_inter(const Matrix& d, const Labels& y) {
    double intra = 0.0, inter = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < y.size(); ++i) {
        for (std::size_t j = i + 1; j < y.size(); ++j) {
            if (y[i] == y[j]) intra = std::max(intra, d(i, j));
            else inter = std::min(inter, d(i, j));
        }
    }
    return {intra, inter};
}

Outcome ac1() {
    Stopwatch clock;
    auto instances = random_instances();
    std::size_t mismatched = 0;
    for (const auto& e : instances) {
        auto tree = build_mst(e);
        auto fc = forest_cut(tree);
        auto fl = floyd_minimax(e, 0);
        bool same = fc.values() == fl.values();
        for (std::size_t i = 0; same && i < e.size(); ++i)
            for (std::size_t j = 0; same && j < e.size(); ++j)
                same = fc(i, j) == mst_path_max(tree, i, j);
        mismatched += !same;
    }
    const double secs = clock.seconds();
    return {mismatched == 0 && secs < 30.0,
            fmt("forest_cut == floyd_minimax == mst_path_max on %zu/50 datasets, %.2f s (limit 30 s)",
                50 - mismatched, secs)};
}

Outcome ac2() {
    std::size_t failed = 0;
    for (const auto& e : random_instances())
        failed += !check_ultrametric(forest_cut(build_mst(e)).values(), 0.0).holds;
    return {failed == 0, fmt("ultrametric with tol 0 on %zu/50 forest_cut outputs", 50 - failed)};
}

Outcome ac3() {
    std::mt19937_64 gen(77);
    std::size_t pairs = 0, wrong = 0;
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = 3 + gen() % 7;  // 3..9
        auto e = build_distance_matrix(oracle::random_points(n, 2 + gen() % 3, gen()), Metric::Euclidean);
        auto tree = build_mst(e);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                ++pairs;
                wrong += oracle::brute_minimax(e, i, j, n) != mst_path_max(tree, i, j);
            }
        }
    }
    return {wrong == 0, fmt("exhaustive simple-path minimax == mst_path_max on %zu/%zu pairs, 20 instances",
                            pairs - wrong, pairs)};
}

Outcome ac4() {
    std::vector<SyntheticSpec> specs;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        specs.push_back(SyntheticSpec::defaults(Shape::TwoMoon, seed));
        specs.push_back(SyntheticSpec::defaults(Shape::RingsWithNoise, seed));
    }
    int consistent = 0, separated = 0, exact = 0;
    for (const auto& spec : specs) {
        auto data = generate(spec);
        auto e = build_distance_matrix(data, Metric::Euclidean);
        if (!check_consistency(e, data.labels()).consistent) continue;
        ++consistent;
        auto [intra, inter] = intra_inter(forest_cut(build_mst(e)).values(), data.labels());
        separated += intra < inter;
        auto a = cluster_transitive(data, {.k = data.num_classes(), .seed = spec.seed});
        exact += error_rate(a.labels, data.labels()).error_rate == 0.0;
    }
    return {consistent == 20 && separated == 20 && exact == 20,
            fmt("%d/20 sets consistent; max intra D < min inter D on %d; error 0 on %d", consistent,
                separated, exact)};
}

Outcome ac5() {
    struct Case {
        const char* name;
        const char* file;
        std::size_t label_col;
        int k;
        double transitive_max, base_lo, base_hi;
    };
    const Case cases[] = {{"iris", "iris.csv", 4, 3, 0.10, 0.08, 0.18},
                          {"ionosphere", "ionosphere.csv", 34, 2, 0.25, 0.25, 0.35}};
    Outcome out;
    for (const auto& c : cases) {
        Stopwatch clock;
        auto data = load_csv(data_dir / c.file, {.label_column = c.label_col});
        KMeansConfig cfg{.k = c.k, .seed = 0};
        double t = error_rate(cluster_transitive(data, cfg).labels, data.labels()).error_rate;
        double b = error_rate(cluster_kmeans_baseline(data, cfg).labels, data.labels()).error_rate;
        const double secs = clock.seconds();
        bool ok = t <= c.transitive_max && b >= c.base_lo && b <= c.base_hi && secs < 10.0;
        out.pass = out.pass && ok;
        out.detail += fmt("%s%s n=%zu transitive %.4f (<= %.2f) baseline %.4f ([%.2f, %.2f]) %.2f s",
                          out.detail.empty() ? "" : "; ", c.name, data.size(), t, c.transitive_max,
                          b, c.base_lo, c.base_hi, secs);
    }
    return out;
}

Outcome ac6() {
    double total = 0.0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto spec = SyntheticSpec::defaults(Shape::GaussianMixture, seed);
        spec.params.mixture_sigma = 0.07;
        spec.params.mixture_min_separation = 0.25;
        total += duality_difference(generate(spec), {.k = 3, .seed = seed});
    }
    const double mean = total / 20.0;
    double ideal_max = 0.0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto spec = SyntheticSpec::defaults(Shape::GaussianMixture, 100 + seed);
        spec.params.mixture_sigma = 0.02;
        spec.params.mixture_min_separation = 0.4;
        ideal_max = std::max(ideal_max, duality_difference(generate(spec), {.k = 3, .seed = seed}));
    }
    return {mean <= 0.03 && ideal_max == 0.0,
            fmt("mean duality difference %.4f over 20 mixtures (<= 0.03); max %.4f on 10 ideal sets (== 0)",
                mean, ideal_max)};
}

Outcome ac7() {
    int differ = 0, exact = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto data = generate(SyntheticSpec::defaults(Shape::MultiScaleGaussians, seed));
        auto transitive = cluster_transitive(data, {.k = 3, .seed = seed});
        auto single = cluster_hierarchical_mstcut(data, 3);
        differ += error_rate(single.labels, transitive.labels).mismatches > 0;
        exact += error_rate(transitive.labels, data.labels()).error_rate == 0.0;
    }
    return {differ == 10 && exact == 10,
            fmt("multi-scale seeds 0..9: hierarchical differs on %d/10, transitive error 0 on %d/10",
                differ, exact)};
}

Outcome ac8() {
    auto data = generate(SyntheticSpec::defaults(Shape::TwoMoon, 0));
    auto e = build_distance_matrix(data, Metric::Euclidean);
    std::vector<double> ratios;
    for (std::size_t k = 2; k <= 6; ++k) {
        auto [intra, inter] = intra_inter(order_k_distance(e, k).values(), data.labels());
        ratios.push_back(inter / intra);
    }
    bool monotone = std::is_sorted(ratios.begin(), ratios.end());
    bool closure = order_k_distance(e, e.size()).values() == floyd_minimax(e).values();
    std::ostringstream list;
    for (double r : ratios) list << (list.tellp() ? "," : "") << fmt("%.4f", r);
    return {monotone && closure, "ratios k=2..6 [" + list.str() + "] " +
                                     (monotone ? "non-decreasing" : "NOT monotone") +
                                     "; D_n == floyd_minimax " + (closure ? "yes" : "no")};
}

Outcome ac9() {
    BenchmarkOptions options;
    options.sizes = {500, 1000, 2000, 4000};
    options.include_kmeans = false;
    auto table = scaling_benchmark(options);
    const double cut_4000 = table.median(4000, "forest_cut") / 1000.0;
    const double slope = table.transitive_slope;
    return {slope >= 1.7 && slope <= 2.4 && cut_4000 < 5.0,
            fmt("log-log slope %.3f ([1.7, 2.4]); forest_cut n=4000 %.3f s (< 5 s)", slope, cut_4000)};
}

Outcome ac10() {
    int exact = 0;
    for (Shape shape : {Shape::TwoMoon, Shape::RingsWithNoise}) {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            auto data = generate(SyntheticSpec::defaults(shape, seed));
            auto a = cluster_transitive(data, {.k = data.num_classes(), .seed = seed});
            exact += error_rate(a.labels, data.labels()).error_rate == 0.0;
        }
    }
    // Labelled-CSV path: write a generated set, reload it, cluster it.
    const fs::path csv = fs::temp_directory_path() / "transclust_acceptance_rings.csv";
    write_csv(generate(SyntheticSpec::defaults(Shape::RingsWithNoise, 9)), csv);
    auto loaded = load_csv(csv, {.label_column = 2});
    fs::remove(csv);
    double csv_error = error_rate(cluster_transitive(loaded, {.k = loaded.num_classes()}).labels,
                                  loaded.labels()).error_rate;
    return {exact == 10 && csv_error == 0.0,
            fmt("error 0 on %d/10 two-moon and ring sets; labelled CSV round trip n=%zu error %.4f",
                exact, loaded.size(), csv_error)};
}

}  // namespace

int main(int argc, char** argv) {
    const std::map<int, std::function<Outcome()>> criteria{
        {1, ac1}, {2, ac2}, {3, ac3}, {4, ac4}, {5, ac5},
        {6, ac6}, {7, ac7}, {8, ac8}, {9, ac9}, {10, ac10}};

    std::vector<int> ids;
    for (int i = 1; i < argc; ++i) ids.push_back(std::atoi(argv[i]));
    if (ids.empty())
        for (const auto& [id, _] : criteria) ids.push_back(id);

    int failures = 0;
    for (int id : ids) {
        auto it = criteria.find(id);
        if (it == criteria.end()) {
            std::cerr << "unknown criterion " << id << "\n";
            return 2;
        }
        Outcome o;
        try {
            o = it->second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::cout << (o.pass ? "PASS" : "FAIL") << " AC" << id << " " << o.detail << std::endl;
        failures += !o.pass;
    }
    return failures == 0 ? 0 : 1;
}
