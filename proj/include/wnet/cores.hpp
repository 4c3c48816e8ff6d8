// Generalized Ps-cores (sum of weights) of a weighted directed network.
#pragma once

#include <vector>

#include "wnet/dendrogram.hpp"
#include "wnet/model.hpp"

namespace wnet {

struct CoreDecomposition {
  DegreeMode mode = DegreeMode::All;
  std::vector<double> core_number;
  std::vector<std::size_t> peel_order;  // removal order, first removed first
  std::vector<double> levels;           // distinct core numbers, ascending
};

/// Weighted degree of `v` inside the node set `inside`. In All mode an arc
/// contributes to both endpoints and a loop counts once.
double core_degree(const Network& net, std::size_t v, const std::vector<bool>& inside,
                   DegreeMode mode);

/// Exact core numbers by repeatedly removing the node of least remaining
/// weighted degree (smallest index among ties).
CoreDecomposition ps_core_numbers(const Network& net, DegreeMode mode);

/// Nodes with core number >= level.
std::vector<std::size_t> core_at(const CoreDecomposition& dec, double level);

/// Nodes ordered by descending core number; ties in reverse peel order.
std::vector<std::size_t> core_ranking(const CoreDecomposition& dec);

/// Chain dendrogram of the core expansion: nodes join the growing core in
/// ranking order at height t_max - t.
Dendrogram core_expansion_dendrogram(const CoreDecomposition& dec,
                                     std::vector<std::string> labels);

}  // namespace wnet
