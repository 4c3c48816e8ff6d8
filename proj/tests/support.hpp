// Helpers shared by the unit tests and the acceptance runner.
#pragma once

#include <random>
#include <string>
#include <vector>

#include "wnet/model.hpp"

namespace wnet::testing {

inline std::vector<NodeRecord> plain_nodes(std::size_t n) {
  std::vector<NodeRecord> nodes(n);
  for (std::size_t i = 0; i < n; ++i) {
    nodes[i].label = "N" + std::to_string(i + 1);
    nodes[i].original_index = i;
  }
  return nodes;
}

/// Network from a dense grid; cells <= 0 are absent.
inline Network network_from_grid(const std::vector<std::vector<double>>& grid) {
  std::vector<Arc> arcs;
  for (std::size_t u = 0; u < grid.size(); ++u)
    for (std::size_t v = 0; v < grid[u].size(); ++v)
      if (grid[u][v] > 0.0) arcs.push_back({u, v, grid[u][v]});
  return Network(plain_nodes(grid.size()), arcs);
}

/// Fully present matrix from a dense grid.
inline WeightMatrix matrix_from_grid(const std::vector<std::vector<double>>& grid) {
  WeightMatrix m(grid.size());
  for (std::size_t u = 0; u < grid.size(); ++u)
    for (std::size_t v = 0; v < grid.size(); ++v) m.set(u, v, grid[u][v]);
  return m;
}

struct RandomNetworkOptions {
  double arc_probability = 0.5;
  bool loops = false;
  bool integer_weights = false;
  double max_weight = 100.0;
};

inline Network random_network(std::mt19937_64& rng, std::size_t n,
                              const RandomNetworkOptions& opt = {}) {
  std::bernoulli_distribution has_arc(opt.arc_probability);
  std::uniform_real_distribution<double> real(0.01, opt.max_weight);
  std::uniform_int_distribution<int> whole(1, static_cast<int>(opt.max_weight));
  std::vector<Arc> arcs;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      if (u == v && !opt.loops) continue;
      if (!has_arc(rng)) continue;
      arcs.push_back({u, v, opt.integer_weights ? whole(rng) : real(rng)});
    }
  return Network(plain_nodes(n), arcs);
}

inline std::vector<std::vector<double>> random_grid(std::mt19937_64& rng, std::size_t n,
                                                    double zero_probability = 0.2,
                                                    double max_value = 10.0) {
  std::bernoulli_distribution zero(zero_probability);
  std::uniform_real_distribution<double> value(0.0, max_value);
  std::vector<std::vector<double>> grid(n, std::vector<double>(n, 0.0));
  for (auto& row : grid)
    for (auto& x : row) x = zero(rng) ? 0.0 : value(rng);
  return grid;
}

}  // namespace wnet::testing
