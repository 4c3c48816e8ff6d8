// Binary merge tree shared by clustering and core expansion.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace wnet {

/// Node ids below leaf_count() are leaves; id leaf_count() + i is merge i.
struct Merge {
  std::size_t left = 0;
  std::size_t right = 0;
  double height = 0.0;

  friend bool operator==(const Merge&, const Merge&) = default;
};

class Dendrogram {
public:
  Dendrogram() = default;
  /// Requires exactly labels.size() - 1 merges, each joining two existing
  /// roots, with non-decreasing heights.
  Dendrogram(std::vector<std::string> labels, std::vector<Merge> merges);

  std::size_t leaf_count() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Merge>& merges() const { return merges_; }

  /// Leaves in left-to-right traversal order.
  std::vector<std::size_t> leaf_order() const;

  /// Leaves below merge `merge_index`, left to right.
  std::vector<std::size_t> leaves_under(std::size_t merge_index) const;

  /// Copy with the children of merge `merge_index` exchanged.
  Dendrogram swap_subtree(std::size_t merge_index) const;

  friend bool operator==(const Dendrogram&, const Dendrogram&) = default;

private:
  void collect(std::size_t node, std::vector<std::size_t>& out) const;

  std::vector<std::string> labels_;
  std::vector<Merge> merges_;
};

}  // namespace wnet
