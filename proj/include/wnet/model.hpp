// Weighted directed network model shared by every analysis module.
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace wnet {

/// Raised when input data violates a precondition of an analysis.
class DataError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

using Warnings = std::vector<std::string>;

enum class DegreeMode { Out, In, All };

struct NodeRecord {
  std::string label;
  std::string iso2;                      // empty when unknown, else exactly 2 chars
  std::optional<long long> population;
  std::size_t original_index = 0;        // index in the network this node was taken from
  friend bool operator==(const NodeRecord&, const NodeRecord&) = default;
};

struct Arc {
  std::size_t source = 0;
  std::size_t target = 0;
  double weight = 0.0;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Dense n x n grid with an explicit presence mask. Missing cells hold 0.
class WeightMatrix {
public:
  WeightMatrix() = default;
  explicit WeightMatrix(std::size_t n, std::vector<std::string> labels = {});

  std::size_t size() const { return n_; }

  double value(std::size_t u, std::size_t v) const { return values_[u * n_ + v]; }
  bool present(std::size_t u, std::size_t v) const { return present_[u * n_ + v] != 0; }

  /// Sets a present cell.
  void set(std::size_t u, std::size_t v, double value);
  /// Marks a cell missing and zeroes it.
  void clear(std::size_t u, std::size_t v);

  std::size_t present_count() const;

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);

  friend bool operator==(const WeightMatrix&, const WeightMatrix&) = default;

private:
  std::size_t n_ = 0;
  std::vector<double> values_;
  std::vector<unsigned char> present_;
  std::vector<std::string> labels_;
};

/// Immutable weighted directed network. Node indices are 0-based in the API
/// and 1-based in every file format.
class Network {
public:
  Network() = default;
  /// Arcs must reference valid nodes, carry non-negative weights and be
  /// unique per (source, target); the arc list is stored sorted.
  Network(std::vector<NodeRecord> nodes, std::vector<Arc> arcs);

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t arc_count() const { return arcs_.size(); }

  const std::vector<NodeRecord>& nodes() const { return nodes_; }
  const NodeRecord& node(std::size_t v) const { return nodes_.at(v); }
  const std::vector<Arc>& arcs() const { return arcs_; }

  /// Weight of arc (u, v) if present.
  std::optional<double> weight(std::size_t u, std::size_t v) const;

  double total_weight() const;
  std::size_t loop_count() const;

  /// Index of the node whose iso2 code or label equals `key`.
  std::optional<std::size_t> find(const std::string& key) const;

  /// Display name of a node: iso2 when known, else the label.
  const std::string& short_name(std::size_t v) const;

  /// Copy with replaced node records (same count); arcs untouched.
  Network with_nodes(std::vector<NodeRecord> nodes) const;

  friend bool operator==(const Network&, const Network&) = default;

private:
  std::vector<NodeRecord> nodes_;
  std::vector<Arc> arcs_;
};

/// All mode is wod + wid, so a loop contributes twice.
std::vector<double> weighted_degrees(const Network& net, DegreeMode mode);

/// Arc density. By default loops are excluded from both the arc count and the
/// n(n-1) denominator; with `include_loops` the ratio is m / n^2.
double density(const Network& net, bool include_loops = false);

struct WeightRange {
  double min = 0.0;
  double max = 0.0;
};
WeightRange weight_range(const Network& net);

WeightMatrix to_matrix(const Network& net, bool use_short_names = true);
/// Inverse of to_matrix: one arc per present cell; node labels from the matrix.
Network from_matrix(const WeightMatrix& m);

/// Subnetwork induced by `keep` (indices into `net`), nodes renumbered densely
/// in increasing original order.
Network induced_subnetwork(const Network& net, std::span<const std::size_t> keep);

}  // namespace wnet
