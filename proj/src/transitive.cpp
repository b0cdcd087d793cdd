#include "transclust/transitive.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "transclust/parallel.hpp"

namespace transclust {

namespace {

struct TreeAdjacency {
    // For vertex x: (neighbour, edge index) pairs.
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> links;

    explicit TreeAdjacency(const SpanningTree& tree) : links(tree.n) {
        for (std::size_t id = 0; id < tree.edges.size(); ++id) {
            const auto& e = tree.edges[id];
            links[e.u].emplace_back(e.v, id);
            links[e.v].emplace_back(e.u, id);
        }
    }
};

void validate_tree(const SpanningTree& tree) {
    if (!is_spanning_tree(tree)) throw std::invalid_argument("input is not a spanning tree");
}

TransitiveMatrix wrap(Matrix values, TransitiveSource source, std::size_t order) {
    return {DistanceMatrix{std::move(values), "transitive"}, source, order};
}

}  // namespace

TransitiveMatrix forest_cut(const SpanningTree& tree) {
    validate_tree(tree);
    const std::size_t n = tree.n;
    Matrix out(n, n, 0.0);

    std::vector<std::size_t> order(tree.edges.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return edge_less(tree.edges[b], tree.edges[a]);
    });

    const TreeAdjacency adj(tree);
    std::vector<bool> alive(tree.edges.size(), true);
    std::vector<std::size_t> stamp(n, 0);
    std::size_t current_stamp = 0;
    std::vector<std::size_t> stack;

    // Vertices reachable from `root` over edges that are still present.
    auto collect = [&](std::size_t root, std::vector<std::size_t>& members) {
        members.clear();
        ++current_stamp;
        stamp[root] = current_stamp;
        stack.assign(1, root);
        while (!stack.empty()) {
            std::size_t x = stack.back();
            stack.pop_back();
            members.push_back(x);
            for (auto [y, id] : adj.links[x]) {
                if (alive[id] && stamp[y] != current_stamp) {
                    stamp[y] = current_stamp;
                    stack.push_back(y);
                }
            }
        }
    };

    // Cutting in globally decreasing order is the same as cutting the heaviest
    // edge of every tree in the forest round by round: cuts in different trees
    // never interact, and when an edge is reached all heavier edges of its
    // tree are already gone.
    std::vector<std::size_t> left, right;
    for (std::size_t id : order) {
        const Edge& e = tree.edges[id];
        alive[id] = false;
        collect(e.u, left);
        collect(e.v, right);
        for (std::size_t a : left) {
            for (std::size_t b : right) {
                out(a, b) = e.w;
                out(b, a) = e.w;
            }
        }
    }
    return wrap(std::move(out), TransitiveSource::ForestCut, n);
}

TransitiveMatrix mst_path_matrix(const SpanningTree& tree) {
    validate_tree(tree);
    const std::size_t n = tree.n;
    Matrix out(n, n, 0.0);
    const TreeAdjacency adj(tree);
    std::vector<std::size_t> stack;
    std::vector<bool> seen(n);
    for (std::size_t s = 0; s < n; ++s) {
        std::fill(seen.begin(), seen.end(), false);
        seen[s] = true;
        stack.assign(1, s);
        while (!stack.empty()) {
            std::size_t x = stack.back();
            stack.pop_back();
            for (auto [y, id] : adj.links[x]) {
                if (seen[y]) continue;
                seen[y] = true;
                out(s, y) = std::max(out(s, x), tree.edges[id].w);
                stack.push_back(y);
            }
        }
    }
    return wrap(std::move(out), TransitiveSource::MstPath, n);
}

TransitiveMatrix floyd_minimax(const DistanceMatrix& distances, unsigned threads) {
    const std::size_t n = distances.size();
    Matrix d = distances.values;
    for (std::size_t p = 0; p < n; ++p) {
        // Row p is a fixed point of this pivot step, so it is read-only here.
        parallel_for(0, n, threads, [&](std::size_t i) {
            if (i == p) return;
            const double via = d(i, p);
            auto row_i = d.row(i);
            auto row_p = std::as_const(d).row(p);
            for (std::size_t j = 0; j < n; ++j) {
                row_i[j] = std::min(row_i[j], std::max(via, row_p[j]));
            }
        });
    }
    return wrap(std::move(d), TransitiveSource::Oracle, n);
}

TransitiveMatrix order_k_distance(const DistanceMatrix& distances, std::size_t k,
                                  unsigned threads) {
    const std::size_t n = distances.size();
    if (k < 2) throw std::invalid_argument("transitive order must be at least 2");
    if (k > std::max<std::size_t>(n, 2)) {
        throw std::invalid_argument("transitive order " + std::to_string(k) +
                                    " exceeds the sample count " + std::to_string(n));
    }
    const Matrix& e = distances.values;
    Matrix current = e;
    Matrix next(n, n);
    // One more vertex per step: D_{m+1}(i,j) = min(D_m(i,j), min_u max(D_m(i,u), E(u,j))).
    for (std::size_t m = 2; m < k; ++m) {
        parallel_for(0, n, threads, [&](std::size_t i) {
            auto di = current.row(i);
            auto out = next.row(i);
            std::copy(di.begin(), di.end(), out.begin());
            for (std::size_t u = 0; u < n; ++u) {
                const double first = di[u];
                auto eu = e.row(u);
                for (std::size_t j = 0; j < n; ++j) {
                    out[j] = std::min(out[j], std::max(first, eu[j]));
                }
            }
        });
        std::swap(current, next);
    }
    TransitiveMatrix result = wrap(std::move(current), TransitiveSource::OrderK, k);
    result.distances.metric = distances.metric;
    return result;
}

UltrametricCheck check_ultrametric(const Matrix& m, double tol) {
    const std::size_t n = m.rows();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double dij = m(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                if (dij > std::max(m(i, k), m(k, j)) + tol) {
                    return {false, std::array<std::size_t, 3>{i, j, k}};
                }
            }
        }
    }
    return {true, std::nullopt};
}

}  // namespace transclust
