#include "wnet/cores.hpp"

#include <algorithm>
#include <limits>

namespace wnet {

double core_degree(const Network& net, std::size_t v, const std::vector<bool>& inside,
                   DegreeMode mode) {
  double deg = 0.0;
  for (const auto& a : net.arcs()) {
    if (!inside[a.source] || !inside[a.target]) continue;
    const bool outgoing = a.source == v && mode != DegreeMode::In;
    const bool incoming = a.target == v && mode != DegreeMode::Out;
    if (outgoing || incoming) deg += a.weight;
  }
  return deg;
}

CoreDecomposition ps_core_numbers(const Network& net, DegreeMode mode) {
  const std::size_t n = net.node_count();
  CoreDecomposition dec;
  dec.mode = mode;
  dec.core_number.assign(n, 0.0);

  std::vector<double> degree(n, 0.0);
  // Per node, the arcs whose removal lowers its degree: (neighbor, weight).
  std::vector<std::vector<std::pair<std::size_t, double>>> affects(n);
  for (const auto& a : net.arcs()) {
    if (a.source == a.target) {
      degree[a.source] += a.weight;
      continue;
    }
    if (mode != DegreeMode::In) {
      degree[a.source] += a.weight;
      affects[a.target].emplace_back(a.source, a.weight);
    }
    if (mode != DegreeMode::Out) {
      degree[a.target] += a.weight;
      affects[a.source].emplace_back(a.target, a.weight);
    }
  }

  std::vector<bool> removed(n, false);
  double threshold = -std::numeric_limits<double>::infinity();
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = n;
    for (std::size_t v = 0; v < n; ++v)
      if (!removed[v] && (pick == n || degree[v] < degree[pick])) pick = v;
    threshold = std::max(threshold, degree[pick]);
    dec.core_number[pick] = threshold;
    dec.peel_order.push_back(pick);
    removed[pick] = true;
    for (const auto& [u, w] : affects[pick])
      if (!removed[u]) degree[u] -= w;
  }

  dec.levels = dec.core_number;
  std::sort(dec.levels.begin(), dec.levels.end());
  dec.levels.erase(std::unique(dec.levels.begin(), dec.levels.end()), dec.levels.end());
  return dec;
}

std::vector<std::size_t> core_at(const CoreDecomposition& dec, double level) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < dec.core_number.size(); ++v)
    if (dec.core_number[v] >= level) out.push_back(v);
  return out;
}

std::vector<std::size_t> core_ranking(const CoreDecomposition& dec) {
  std::vector<std::size_t> order(dec.peel_order.rbegin(), dec.peel_order.rend());
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return dec.core_number[a] > dec.core_number[b];
  });
  return order;
}

Dendrogram core_expansion_dendrogram(const CoreDecomposition& dec,
                                     std::vector<std::string> labels) {
  const std::size_t n = dec.core_number.size();
  if (labels.size() != n) throw DataError("label count does not match the decomposition");
  if (n == 0) throw DataError("empty core decomposition");
  const auto order = core_ranking(dec);
  const double t_max = dec.core_number[order.front()];
  std::vector<Merge> merges;
  std::size_t cluster = order.front();
  for (std::size_t i = 1; i < n; ++i) {
    merges.push_back({cluster, order[i], t_max - dec.core_number[order[i]]});
    cluster = n + merges.size() - 1;
  }
  return Dendrogram(std::move(labels), std::move(merges));
}

}  // namespace wnet
