#include "transclust/mst.hpp"

#include <algorithm>
#include <iomanip>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace transclust {

bool edge_less(const Edge& a, const Edge& b) {
    if (a.w != b.w) return a.w < b.w;
    auto a_lo = std::min(a.u, a.v), b_lo = std::min(b.u, b.v);
    if (a_lo != b_lo) return a_lo < b_lo;
    return std::max(a.u, a.v) < std::max(b.u, b.v);
}

Edge canonical(Edge e) {
    if (e.u > e.v) std::swap(e.u, e.v);
    return e;
}

double SpanningTree::total_weight() const {
    double sum = 0.0;
    for (const auto& e : edges) sum += e.w;
    return sum;
}

SpanningTree build_mst(const DistanceMatrix& distances) {
    const std::size_t n = distances.size();
    if (n == 0) throw std::invalid_argument("cannot build a spanning tree over zero vertices");

    constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
    std::vector<bool> in_tree(n, false);
    // (parent[v], v, weight[v]) is the lightest known edge from the tree to v.
    std::vector<std::size_t> parent(n, none);
    std::vector<double> weight(n, std::numeric_limits<double>::infinity());

    SpanningTree tree{n, {}};
    tree.edges.reserve(n - 1);

    std::size_t current = 0;
    in_tree[0] = true;
    for (std::size_t added = 1; added < n; ++added) {
        const auto row = distances.values.row(current);
        std::size_t next = none;
        for (std::size_t v = 0; v < n; ++v) {
            if (in_tree[v]) continue;
            Edge candidate{current, v, row[v]};
            if (parent[v] == none || edge_less(candidate, Edge{parent[v], v, weight[v]})) {
                parent[v] = current;
                weight[v] = row[v];
            }
            if (next == none ||
                edge_less(Edge{parent[v], v, weight[v]}, Edge{parent[next], next, weight[next]})) {
                next = v;
            }
        }
        in_tree[next] = true;
        tree.edges.push_back(canonical({parent[next], next, weight[next]}));
        current = next;
    }
    return tree;
}

namespace {

std::vector<std::vector<std::pair<std::size_t, double>>> adjacency(const SpanningTree& tree) {
    std::vector<std::vector<std::pair<std::size_t, double>>> adj(tree.n);
    for (const auto& e : tree.edges) {
        adj[e.u].emplace_back(e.v, e.w);
        adj[e.v].emplace_back(e.u, e.w);
    }
    return adj;
}

}  // namespace

double mst_path_max(const SpanningTree& tree, std::size_t i, std::size_t j) {
    if (i >= tree.n || j >= tree.n) {
        throw std::out_of_range("vertex index out of range for tree of size " +
                                std::to_string(tree.n));
    }
    if (i == j) return 0.0;
    const auto adj = adjacency(tree);
    // Depth-first walk from i carrying the running maximum.
    std::vector<double> best(tree.n, -1.0);
    std::vector<std::size_t> stack{i};
    best[i] = 0.0;
    while (!stack.empty()) {
        std::size_t x = stack.back();
        stack.pop_back();
        if (x == j) return best[x];
        for (auto [y, w] : adj[x]) {
            if (best[y] < 0.0) {
                best[y] = std::max(best[x], w);
                stack.push_back(y);
            }
        }
    }
    throw std::invalid_argument("vertices are not connected in the tree");
}

bool is_spanning_tree(const SpanningTree& tree) {
    if (tree.n == 0 || tree.edges.size() != tree.n - 1) return false;
    UnionFind sets(tree.n);
    for (const auto& e : tree.edges) {
        if (e.u >= tree.n || e.v >= tree.n || !sets.unite(e.u, e.v)) return false;
    }
    return true;  // n - 1 merges without a cycle connect all n vertices
}

void write_edge_list(const SpanningTree& tree, std::ostream& out) {
    out << std::setprecision(17);
    for (const auto& e : tree.edges) out << e.u << ' ' << e.v << ' ' << e.w << '\n';
}

UnionFind::UnionFind(std::size_t n) : parent_(n), rank_size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t UnionFind::find(std::size_t x) {
    while (parent_[x] != x) {
        parent_[x] = parent_[parent_[x]];
        x = parent_[x];
    }
    return x;
}

bool UnionFind::unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_size_[a] < rank_size_[b]) std::swap(a, b);
    parent_[b] = a;
    rank_size_[a] += rank_size_[b];
    return true;
}

}  // namespace transclust
