#pragma once

#include <array>
#include <cstddef>
#include <optional>

#include "transclust/distance.hpp"
#include "transclust/mst.hpp"

namespace transclust {

enum class TransitiveSource { ForestCut, MstPath, Oracle, OrderK };

/// A distance matrix of transitive (minimax path) distances. For every source
/// other than OrderK the values form an ultrametric; every off-diagonal value
/// is the weight of some input edge.
struct TransitiveMatrix {
    DistanceMatrix distances;
    TransitiveSource source = TransitiveSource::ForestCut;
    std::size_t order = 0;  // path vertex limit for OrderK, n otherwise

    std::size_t size() const { return distances.size(); }
    double operator()(std::size_t i, std::size_t j) const { return distances(i, j); }
    const Matrix& values() const { return distances.values; }
};

/// Forest cutting on the minimum spanning tree. Edges are visited in
/// decreasing edge_less order; when an edge is removed it is the heaviest
/// edge left in its tree, so its weight is written to every pair split by the
/// cut. Each off-diagonal cell is written exactly once: O(n^2) overall.
TransitiveMatrix forest_cut(const SpanningTree& tree);

/// All-pairs tree path maxima by one traversal per source vertex, O(n^2).
TransitiveMatrix mst_path_matrix(const SpanningTree& tree);

/// Minimax closure by dynamic programming over pivots, O(n^3):
///   D[i][j] <- min(D[i][j], max(D[i][p], D[p][j])).
/// Reference oracle for the fast routes.
TransitiveMatrix floyd_minimax(const DistanceMatrix& distances, unsigned threads = 1);

/// Order-k transitive distance: the minimax value over paths with at most k
/// vertices, via repeated (min, max) products with E. k = 2 returns E.
/// O(n^3) per order step. Throws std::invalid_argument unless 2 <= k <= n
/// (k = 2 is also accepted for n = 1).
TransitiveMatrix order_k_distance(const DistanceMatrix& distances, std::size_t k,
                                  unsigned threads = 1);

struct UltrametricCheck {
    bool holds = true;
    /// First (i, j, k) in lexicographic order with D(i,j) > max(D(i,k), D(k,j)) + tol.
    std::optional<std::array<std::size_t, 3>> violation;
};

/// O(n^3) check of the ultrametric inequality over all triples.
UltrametricCheck check_ultrametric(const Matrix& m, double tol = 0.0);

}  // namespace transclust
