#pragma once

#include <cstddef>
#include <vector>

namespace transclust {

/// Solves the square linear assignment problem exactly (Hungarian method with
/// potentials, O(K^3)). Returns assignment[row] = column minimising the total
/// cost.
std::vector<std::size_t> solve_assignment(const std::vector<std::vector<double>>& cost);

}  // namespace transclust
