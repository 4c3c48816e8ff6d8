// Link-reduction skeletons: closest k-neighbors and Pathfinder networks.
#pragma once

#include <limits>
#include <vector>

#include "wnet/model.hpp"

namespace wnet {

enum class Direction { Out, In };

/// Keeps, for every node, its k heaviest outgoing (or incoming) arcs; ties go
/// to the smaller neighbor index. The skeleton is the union over all nodes.
/// Loops are never selected.
Network k_neighbors(const Network& net, std::size_t k, Direction direction);

enum class DissimMethod {
  Subtract,  // w_max - w
  Ratio,     // w_max / w
};

/// Converts a similarity matrix into a dissimilarity matrix cell by cell.
WeightMatrix sim_to_dissim(const WeightMatrix& m, DissimMethod method);

/// Minkowski exponent; infinity selects the max operation.
struct PathfinderParams {
  double r = std::numeric_limits<double>::infinity();
  std::size_t q = 0;  // 0 means max(n - 1, 2)
};

/// a (+)_r b = (a^r + b^r)^(1/r), evaluated as m((a/m)^r + (b/m)^r)^(1/r).
double minkowski_combine(double a, double b, double r);

/// Relative tolerance of the "kept iff w <= shortest path" comparison.
inline constexpr double kPathfinderEpsilon = 1e-9;

/// Arc-presence mask of PFnet(M, r, q) over a dissimilarity matrix. An arc
/// (u,v) survives when its weight does not exceed the Minkowski weight of
/// every directed u-v path with at most q arcs. Diagonal cells are dropped.
std::vector<std::vector<bool>> pathfinder(const WeightMatrix& dissimilarity,
                                          const PathfinderParams& params);

/// Subnetwork of `net` with the arcs whose mask entry is set.
Network filter_arcs(const Network& net, const std::vector<std::vector<bool>>& mask);

}  // namespace wnet
