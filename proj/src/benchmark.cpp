#include "transclust/benchmark.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "transclust/distance.hpp"
#include "transclust/mst.hpp"
#include "transclust/transitive.hpp"

namespace transclust {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

double median_of(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size() / 2;
    return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

SyntheticSpec resized(const SyntheticSpec& base, std::size_t n) {
    SyntheticSpec spec = base;
    const double total = base.total();
    std::size_t assigned = 0;
    for (std::size_t c = 0; c < spec.samples_per_cluster.size(); ++c) {
        auto share = static_cast<std::size_t>(std::floor(n * base.samples_per_cluster[c] / total));
        spec.samples_per_cluster[c] = static_cast<int>(std::max<std::size_t>(share, 1));
        assigned += static_cast<std::size_t>(spec.samples_per_cluster[c]);
    }
    spec.noise_count = static_cast<int>(std::floor(n * base.noise_count / total));
    assigned += static_cast<std::size_t>(spec.noise_count);
    for (std::size_t c = 0; assigned < n; c = (c + 1) % spec.samples_per_cluster.size(), ++assigned) {
        ++spec.samples_per_cluster[c];
    }
    return spec;
}

}  // namespace

double BenchmarkTable::median(std::size_t n, const std::string& stage) const {
    for (const auto& row : rows) {
        if (row.n == n && row.stage == stage) return row.median_ms;
    }
    throw std::out_of_range("no benchmark row for n=" + std::to_string(n) + " stage=" + stage);
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw std::invalid_argument("slope fit needs at least two paired values");
    }
    const double m = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

BenchmarkTable scaling_benchmark(const BenchmarkOptions& options) {
    const auto& sizes = options.sizes;
    if (sizes.size() < 3) throw std::invalid_argument("scaling benchmark needs at least 3 sizes");
    if (!std::is_sorted(sizes.begin(), sizes.end()) ||
        std::adjacent_find(sizes.begin(), sizes.end()) != sizes.end()) {
        throw std::invalid_argument("benchmark sizes must be strictly increasing");
    }
    if (options.repeats < 1) throw std::invalid_argument("repeats must be at least 1");

    BenchmarkTable table;
    std::vector<double> ns, totals;
    for (std::size_t n : sizes) {
        std::vector<double> dist_ms, mst_ms, cut_ms, km_ms, total_ms;
        for (int r = 0; r < options.repeats; ++r) {
            SyntheticSpec spec = resized(options.generator, n);
            spec.seed = options.generator.seed + static_cast<std::uint64_t>(r);
            const DataSet data = generate(spec);

            auto start = Clock::now();
            const auto e = build_distance_matrix(data, Metric::Euclidean, options.threads);
            dist_ms.push_back(elapsed_ms(start));

            start = Clock::now();
            const auto tree = build_mst(e);
            mst_ms.push_back(elapsed_ms(start));

            start = Clock::now();
            const auto transitive = forest_cut(tree);
            cut_ms.push_back(elapsed_ms(start));

            total_ms.push_back(dist_ms.back() + mst_ms.back() + cut_ms.back());

            if (options.include_kmeans) {
                KMeansConfig cfg = options.kmeans;
                cfg.threads = options.threads;
                cfg.k = std::min<int>(cfg.k, static_cast<int>(n));
                start = Clock::now();
                (void)kmeans(transitive.values(), cfg);
                km_ms.push_back(elapsed_ms(start));
            }
        }
        table.rows.push_back({n, "distance", median_of(dist_ms)});
        table.rows.push_back({n, "mst", median_of(mst_ms)});
        table.rows.push_back({n, "forest_cut", median_of(cut_ms)});
        if (options.include_kmeans) table.rows.push_back({n, "kmeans", median_of(km_ms)});
        table.rows.push_back({n, "transitive_total", median_of(total_ms)});
        ns.push_back(static_cast<double>(n));
        totals.push_back(std::max(median_of(total_ms), 1e-6));
    }
    table.transitive_slope = loglog_slope(ns, totals);
    return table;
}

void write_benchmark_csv(const BenchmarkTable& table, std::ostream& out) {
    out << "n,stage,ms\n";
    for (const auto& row : table.rows) out << row.n << ',' << row.stage << ',' << row.median_ms << '\n';
}

}  // namespace transclust
