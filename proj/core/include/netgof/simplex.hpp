#pragma once

#include "netgof/graph.hpp"

#include <vector>

namespace netgof {

/// Successive projection for simplex vertex hunting.
///
/// Each row of `points` (n x (K-1)) is lifted to (1, row) so that the K
/// vertices of a (K-1)-simplex become linearly independent. The row with the
/// largest residual norm is taken as a vertex and every residual is projected
/// onto the orthogonal complement of it; this repeats K times. The first
/// index returned maximises the row norm of the input.
std::vector<int> spa_vertices(const Matrix& points, int k);

}  // namespace netgof
