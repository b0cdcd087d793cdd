#pragma once

// Independent reference computations used only by the tests. None of these
// share code paths with the library routines they check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

#include "transclust/dataset.hpp"
#include "transclust/distance.hpp"
#include "transclust/mst.hpp"

namespace transclust::oracle {

/// Uniform points in [0,1)^dim from std::mt19937_64.
inline DataSet random_points(std::size_t n, std::size_t dim, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Matrix m(n, dim);
    for (double& v : m.values()) v = u(gen);
    return DataSet(std::move(m));
}

/// Kruskal over all n(n-1)/2 edges with the same lexicographic tie-break,
/// using its own disjoint-set arrays.
inline std::vector<Edge> kruskal(const DistanceMatrix& d) {
    const std::size_t n = d.size();
    std::vector<Edge> all;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) all.push_back({i, j, d(i, j)});
    std::sort(all.begin(), all.end(), [](const Edge& a, const Edge& b) {
        if (a.w != b.w) return a.w < b.w;
        if (a.u != b.u) return a.u < b.u;
        return a.v < b.v;
    });
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    std::function<std::size_t(std::size_t)> root = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = root(parent[x]);
    };
    std::vector<Edge> tree;
    for (const auto& e : all) {
        auto a = root(e.u), b = root(e.v);
        if (a != b) {
            parent[a] = b;
            tree.push_back(e);
        }
    }
    return tree;
}

/// min over all simple paths from s to t of the largest edge, by exhaustive
/// depth-first enumeration. `max_vertices` bounds the path length in vertices
/// (n for no bound). Exponential; keep n small.
inline double brute_minimax(const DistanceMatrix& d, std::size_t s, std::size_t t,
                            std::size_t max_vertices) {
    if (s == t) return 0.0;
    const std::size_t n = d.size();
    double best = std::numeric_limits<double>::infinity();
    std::vector<bool> on_path(n, false);
    std::function<void(std::size_t, double, std::size_t)> walk = [&](std::size_t x, double worst,
                                                                     std::size_t used) {
        if (worst >= best) return;
        if (x == t) {
            best = worst;
            return;
        }
        if (used == max_vertices) return;
        for (std::size_t y = 0; y < n; ++y) {
            if (on_path[y]) continue;
            on_path[y] = true;
            walk(y, std::max(worst, d(x, y)), used + 1);
            on_path[y] = false;
        }
    };
    on_path[s] = true;
    walk(s, 0.0, 1);
    return best;
}

/// Largest d(C1, C2) over every bipartition of `members`, by enumerating all
/// 2^(m-1) - 1 splits.
inline double widest_partition_gap(const DistanceMatrix& d, const std::vector<std::size_t>& members) {
    const std::size_t m = members.size();
    double widest = 0.0;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (m - 1)); ++mask) {
        double gap = std::numeric_limits<double>::infinity();
        for (std::size_t a = 0; a < m; ++a) {
            for (std::size_t b = 0; b < m; ++b) {
                // member m-1 always sits in C2
                bool a_in = a < m - 1 && ((mask >> a) & 1);
                bool b_in = b < m - 1 && ((mask >> b) & 1);
                if (a_in && !b_in) gap = std::min(gap, d(members[a], members[b]));
            }
        }
        widest = std::max(widest, gap);
    }
    return widest;
}

/// Consistency decided straight from the definition (all bipartitions).
inline bool brute_consistent(const DistanceMatrix& d, const Labels& labels) {
    const int k = count_labels(labels);
    for (int c = 0; c < k; ++c) {
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == c) members.push_back(i);
        if (members.size() < 2) continue;
        const double gap = widest_partition_gap(d, members);
        for (std::size_t y = 0; y < labels.size(); ++y) {
            if (labels[y] == c) continue;
            double to_c = std::numeric_limits<double>::infinity();
            for (auto x : members) to_c = std::min(to_c, d(y, x));
            if (!(gap < to_c)) return false;
        }
    }
    return true;
}

}  // namespace transclust::oracle
