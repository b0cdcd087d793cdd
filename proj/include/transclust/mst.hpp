#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "transclust/distance.hpp"

namespace transclust {

struct Edge {
    std::size_t u = 0;
    std::size_t v = 0;
    double w = 0.0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Total order on edges: (weight, min endpoint, max endpoint). Every module
/// that ranks edges (MST construction, forest cutting, hierarchical cuts) uses
/// this order, which stands in for the distinct-weights assumption.
bool edge_less(const Edge& a, const Edge& b);

/// Edge with endpoints stored as (min, max).
Edge canonical(Edge e);

/// n - 1 weighted edges over vertices {0..n-1}; edges are canonical and
/// listed in the order Prim's algorithm added them.
struct SpanningTree {
    std::size_t n = 0;
    std::vector<Edge> edges;

    double total_weight() const;
};

/// Prim's algorithm on the dense matrix: O(n^2) time, O(n) extra space.
/// Ties between candidate edges are broken by edge_less, so the tree is the
/// unique minimum under that order. Throws std::invalid_argument for n = 0.
SpanningTree build_mst(const DistanceMatrix& distances);

/// Maximum edge weight on the unique tree path between i and j (0 if i == j).
/// O(n) per query. Throws std::out_of_range for bad indices.
double mst_path_max(const SpanningTree& tree, std::size_t i, std::size_t j);

/// True iff the edges connect all n vertices without a cycle (union-find sweep).
bool is_spanning_tree(const SpanningTree& tree);

/// One "u v w" line per edge.
void write_edge_list(const SpanningTree& tree, std::ostream& out);

/// Disjoint-set forest with path halving and union by size.
class UnionFind {
public:
    explicit UnionFind(std::size_t n);

    std::size_t find(std::size_t x);
    /// Returns false when a and b were already in the same set.
    bool unite(std::size_t a, std::size_t b);
    std::size_t size() const { return parent_.size(); }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> rank_size_;
};

}  // namespace transclust
