#include "transclust/kmeans.hpp"

#include <limits>
#include <stdexcept>

#include "transclust/parallel.hpp"
#include "transclust/rng.hpp"

namespace transclust {

std::string to_string(Seeding seeding) {
    return seeding == Seeding::PlusPlus ? "plusplus" : "random-partition";
}

Seeding parse_seeding(const std::string& text) {
    if (text == "plusplus") return Seeding::PlusPlus;
    if (text == "random-partition") return Seeding::RandomPartition;
    throw std::invalid_argument("unknown seeding '" + text + "'");
}

namespace {

double squared_distance(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t c = 0; c < a.size(); ++c) {
        double d = a[c] - b[c];
        s += d * d;
    }
    return s;
}

void copy_row(std::span<const double> from, std::span<double> to) {
    std::copy(from.begin(), from.end(), to.begin());
}

// Centroids as the means of their members, summed in index order.
void update_centroids(const Matrix& rows, const Labels& labels, int k, Matrix& centroids) {
    std::vector<std::size_t> counts(static_cast<std::size_t>(k), 0);
    std::fill(centroids.values().begin(), centroids.values().end(), 0.0);
    for (std::size_t i = 0; i < rows.rows(); ++i) {
        auto c = static_cast<std::size_t>(labels[i]);
        auto dst = centroids.row(c);
        auto src = rows.row(i);
        for (std::size_t d = 0; d < src.size(); ++d) dst[d] += src[d];
        ++counts[c];
    }
    for (std::size_t c = 0; c < counts.size(); ++c) {
        if (counts[c] == 0) continue;
        const double inv = 1.0 / static_cast<double>(counts[c]);
        for (double& v : centroids.row(c)) v *= inv;
    }
}

Matrix seed_plus_plus(const Matrix& rows, int k, Rng& rng) {
    const std::size_t n = rows.rows();
    Matrix centroids(static_cast<std::size_t>(k), rows.cols());
    copy_row(rows.row(rng.below(n)), centroids.row(0));
    std::vector<double> nearest(n, std::numeric_limits<double>::infinity());
    for (std::size_t c = 1; c < static_cast<std::size_t>(k); ++c) {
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            nearest[i] = std::min(nearest[i], squared_distance(rows.row(i), centroids.row(c - 1)));
            total += nearest[i];
        }
        std::size_t pick = 0;
        if (total <= 0.0) {
            pick = rng.below(n);  // every point coincides with a centroid
        } else {
            const double target = rng.uniform() * total;
            double cumulative = 0.0;
            pick = n;
            std::size_t last_positive = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (nearest[i] <= 0.0) continue;
                last_positive = i;
                cumulative += nearest[i];
                if (cumulative > target) {
                    pick = i;
                    break;
                }
            }
            if (pick == n) pick = last_positive;  // rounding at the top end
        }
        copy_row(rows.row(pick), centroids.row(c));
    }
    return centroids;
}

// Moves the point farthest from its own centroid into each empty cluster.
// Only points from clusters with more than one member are eligible, so the
// donor never becomes empty.
void repair_empty(const Matrix& rows, Labels& labels, int k, Matrix& centroids) {
    std::vector<std::size_t> counts(static_cast<std::size_t>(k), 0);
    for (int l : labels) ++counts[static_cast<std::size_t>(l)];
    for (std::size_t c = 0; c < counts.size(); ++c) {
        if (counts[c] != 0) continue;
        std::size_t far = rows.rows();
        double far_d = -1.0;
        for (std::size_t i = 0; i < rows.rows(); ++i) {
            auto own = static_cast<std::size_t>(labels[i]);
            if (counts[own] < 2) continue;
            double d = squared_distance(rows.row(i), centroids.row(own));
            if (d > far_d) {
                far_d = d;
                far = i;
            }
        }
        --counts[static_cast<std::size_t>(labels[far])];
        labels[far] = static_cast<int>(c);
        counts[c] = 1;
        copy_row(rows.row(far), centroids.row(c));
    }
}

ClusterAssignment run_once(const Matrix& rows, const KMeansConfig& cfg, std::uint64_t seed) {
    const std::size_t n = rows.rows();
    const int k = cfg.k;
    Rng rng(seed);

    ClusterAssignment out;
    out.k = k;
    out.labels.assign(n, -1);
    if (cfg.seeding == Seeding::PlusPlus) {
        out.centroids = seed_plus_plus(rows, k, rng);
    } else {
        out.centroids = Matrix(static_cast<std::size_t>(k), rows.cols());
        for (auto& l : out.labels) l = static_cast<int>(rng.below(static_cast<std::uint64_t>(k)));
        update_centroids(rows, out.labels, k, out.centroids);
        repair_empty(rows, out.labels, k, out.centroids);
        update_centroids(rows, out.labels, k, out.centroids);
    }

    Labels next(n);
    for (int iter = 1; iter <= cfg.max_iterations; ++iter) {
        double cost = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            auto x = rows.row(i);
            int best = 0;
            double best_d = squared_distance(x, out.centroids.row(0));
            for (int c = 1; c < k; ++c) {
                double d = squared_distance(x, out.centroids.row(static_cast<std::size_t>(c)));
                if (d < best_d) {
                    best_d = d;
                    best = c;
                }
            }
            next[i] = best;
            cost += best_d;
        }
        out.inertia_trace.push_back(cost);
        out.iterations = iter;
        if (next == out.labels) break;
        out.labels = next;
        repair_empty(rows, out.labels, k, out.centroids);
        update_centroids(rows, out.labels, k, out.centroids);
    }
    out.inertia = compute_inertia(rows, out.labels, out.centroids);
    return out;
}

}  // namespace

double compute_inertia(const Matrix& rows, const Labels& labels, const Matrix& centroids) {
    double total = 0.0;
    for (std::size_t i = 0; i < rows.rows(); ++i) {
        total += squared_distance(rows.row(i), centroids.row(static_cast<std::size_t>(labels[i])));
    }
    return total;
}

ClusterAssignment kmeans(const Matrix& rows, const KMeansConfig& cfg) {
    const std::size_t n = rows.rows();
    if (cfg.k < 1) throw std::invalid_argument("k must be at least 1");
    if (static_cast<std::size_t>(cfg.k) > n) {
        throw std::invalid_argument("k = " + std::to_string(cfg.k) + " exceeds the sample count " +
                                    std::to_string(n));
    }
    if (cfg.restarts < 1) throw std::invalid_argument("restarts must be at least 1");
    if (cfg.max_iterations < 1) throw std::invalid_argument("max_iterations must be at least 1");

    std::vector<ClusterAssignment> runs(static_cast<std::size_t>(cfg.restarts));
    parallel_for(0, runs.size(), cfg.threads, [&](std::size_t r) {
        runs[r] = run_once(rows, cfg, Rng::split(cfg.seed, r));
    });

    std::size_t best = 0;
    for (std::size_t r = 1; r < runs.size(); ++r) {
        if (runs[r].inertia < runs[best].inertia) best = r;
    }
    ClusterAssignment result = std::move(runs[best]);
    result.restarts_used = cfg.restarts;
    return result;
}

}  // namespace transclust
