#include "wnet/model.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace wnet {

WeightMatrix::WeightMatrix(std::size_t n, std::vector<std::string> labels)
    : n_(n), values_(n * n, 0.0), present_(n * n, 0) {
  set_labels(std::move(labels));
}

void WeightMatrix::set(std::size_t u, std::size_t v, double value) {
  values_.at(u * n_ + v) = value;
  present_[u * n_ + v] = 1;
}

void WeightMatrix::clear(std::size_t u, std::size_t v) {
  values_.at(u * n_ + v) = 0.0;
  present_[u * n_ + v] = 0;
}

std::size_t WeightMatrix::present_count() const {
  return static_cast<std::size_t>(std::count(present_.begin(), present_.end(), 1));
}

void WeightMatrix::set_labels(std::vector<std::string> labels) {
  if (labels.empty()) {
    labels.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) labels[i] = std::to_string(i + 1);
  }
  if (labels.size() != n_) throw DataError("matrix label count does not match dimension");
  labels_ = std::move(labels);
}

Network::Network(std::vector<NodeRecord> nodes, std::vector<Arc> arcs)
    : nodes_(std::move(nodes)), arcs_(std::move(arcs)) {
  const std::size_t n = nodes_.size();
  for (const auto& node : nodes_) {
    if (!node.iso2.empty() && node.iso2.size() != 2)
      throw DataError("iso2 code '" + node.iso2 + "' is not 2 characters");
  }
  for (const auto& a : arcs_) {
    if (a.source >= n || a.target >= n) throw DataError("arc endpoint out of range");
    if (!(a.weight >= 0.0)) throw DataError("arc weight must be non-negative");
  }
  std::sort(arcs_.begin(), arcs_.end(), [](const Arc& a, const Arc& b) {
    return std::tie(a.source, a.target) < std::tie(b.source, b.target);
  });
  auto dup = std::adjacent_find(arcs_.begin(), arcs_.end(), [](const Arc& a, const Arc& b) {
    return a.source == b.source && a.target == b.target;
  });
  if (dup != arcs_.end())
    throw DataError("duplicate arc " + std::to_string(dup->source + 1) + " -> " +
                    std::to_string(dup->target + 1));
}

std::optional<double> Network::weight(std::size_t u, std::size_t v) const {
  auto it = std::lower_bound(arcs_.begin(), arcs_.end(), std::pair{u, v},
                             [](const Arc& a, const std::pair<std::size_t, std::size_t>& key) {
                               return std::tie(a.source, a.target) < std::tie(key.first, key.second);
                             });
  if (it != arcs_.end() && it->source == u && it->target == v) return it->weight;
  return std::nullopt;
}

double Network::total_weight() const {
  return std::accumulate(arcs_.begin(), arcs_.end(), 0.0,
                         [](double s, const Arc& a) { return s + a.weight; });
}

std::size_t Network::loop_count() const {
  return static_cast<std::size_t>(
      std::count_if(arcs_.begin(), arcs_.end(), [](const Arc& a) { return a.source == a.target; }));
}

std::optional<std::size_t> Network::find(const std::string& key) const {
  for (std::size_t v = 0; v < nodes_.size(); ++v)
    if (nodes_[v].iso2 == key) return v;
  for (std::size_t v = 0; v < nodes_.size(); ++v)
    if (nodes_[v].label == key) return v;
  return std::nullopt;
}

const std::string& Network::short_name(std::size_t v) const {
  const auto& node = nodes_.at(v);
  return node.iso2.empty() ? node.label : node.iso2;
}

Network Network::with_nodes(std::vector<NodeRecord> nodes) const {
  if (nodes.size() != nodes_.size()) throw DataError("node record count mismatch");
  return Network(std::move(nodes), arcs_);
}

std::vector<double> weighted_degrees(const Network& net, DegreeMode mode) {
  std::vector<double> deg(net.node_count(), 0.0);
  for (const auto& a : net.arcs()) {
    if (mode != DegreeMode::In) deg[a.source] += a.weight;
    if (mode != DegreeMode::Out) deg[a.target] += a.weight;
  }
  return deg;
}

double density(const Network& net, bool include_loops) {
  const double n = static_cast<double>(net.node_count());
  if (net.node_count() < 2) throw DataError("density is undefined for fewer than 2 nodes");
  if (include_loops) return static_cast<double>(net.arc_count()) / (n * n);
  const double m = static_cast<double>(net.arc_count() - net.loop_count());
  return m / (n * (n - 1.0));
}

WeightRange weight_range(const Network& net) {
  if (net.arc_count() == 0) throw DataError("weight range of a network without arcs");
  auto [lo, hi] = std::minmax_element(net.arcs().begin(), net.arcs().end(),
                                      [](const Arc& a, const Arc& b) { return a.weight < b.weight; });
  return {lo->weight, hi->weight};
}

WeightMatrix to_matrix(const Network& net, bool use_short_names) {
  std::vector<std::string> labels;
  labels.reserve(net.node_count());
  for (std::size_t v = 0; v < net.node_count(); ++v)
    labels.push_back(use_short_names ? net.short_name(v) : net.node(v).label);
  WeightMatrix m(net.node_count(), std::move(labels));
  for (const auto& a : net.arcs()) m.set(a.source, a.target, a.weight);
  return m;
}

Network from_matrix(const WeightMatrix& m) {
  std::vector<NodeRecord> nodes(m.size());
  for (std::size_t v = 0; v < m.size(); ++v) {
    nodes[v].label = m.labels()[v];
    nodes[v].original_index = v;
  }
  std::vector<Arc> arcs;
  for (std::size_t u = 0; u < m.size(); ++u)
    for (std::size_t v = 0; v < m.size(); ++v)
      if (m.present(u, v)) arcs.push_back({u, v, m.value(u, v)});
  return Network(std::move(nodes), std::move(arcs));
}

Network induced_subnetwork(const Network& net, std::span<const std::size_t> keep) {
  if (keep.empty()) throw DataError("induced subnetwork of an empty node set");
  std::vector<std::size_t> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.back() >= net.node_count()) throw DataError("node index out of range");

  constexpr std::size_t kDropped = static_cast<std::size_t>(-1);
  std::vector<std::size_t> remap(net.node_count(), kDropped);
  std::vector<NodeRecord> nodes;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    remap[sorted[i]] = i;
    NodeRecord rec = net.node(sorted[i]);
    rec.original_index = sorted[i];
    nodes.push_back(std::move(rec));
  }
  std::vector<Arc> arcs;
  for (const auto& a : net.arcs())
    if (remap[a.source] != kDropped && remap[a.target] != kDropped)
      arcs.push_back({remap[a.source], remap[a.target], a.weight});
  return Network(std::move(nodes), std::move(arcs));
}

}  // namespace wnet
