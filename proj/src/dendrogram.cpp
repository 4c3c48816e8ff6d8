#include "wnet/dendrogram.hpp"

#include "wnet/model.hpp"

namespace wnet {

Dendrogram::Dendrogram(std::vector<std::string> labels, std::vector<Merge> merges)
    : labels_(std::move(labels)), merges_(std::move(merges)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw DataError("dendrogram without leaves");
  if (merges_.size() != n - 1)
    throw DataError("dendrogram over " + std::to_string(n) + " leaves needs " +
                    std::to_string(n - 1) + " merges");
  std::vector<bool> used(2 * n - 1, false);
  for (std::size_t i = 0; i < merges_.size(); ++i) {
    const auto& m = merges_[i];
    for (std::size_t child : {m.left, m.right}) {
      if (child >= n + i) throw DataError("merge refers to a node not yet created");
      if (used[child]) throw DataError("dendrogram node merged twice");
      used[child] = true;
    }
    if (m.left == m.right) throw DataError("merge joins a node with itself");
    if (i > 0 && m.height < merges_[i - 1].height)
      throw DataError("dendrogram heights must be non-decreasing");
  }
}

void Dendrogram::collect(std::size_t node, std::vector<std::size_t>& out) const {
  // Explicit stack: chains from core expansion can be as deep as n.
  std::vector<std::size_t> stack{node};
  const std::size_t n = leaf_count();
  while (!stack.empty()) {
    const std::size_t id = stack.back();
    stack.pop_back();
    if (id < n) {
      out.push_back(id);
    } else {
      const auto& m = merges_[id - n];
      stack.push_back(m.right);
      stack.push_back(m.left);
    }
  }
}

std::vector<std::size_t> Dendrogram::leaf_order() const {
  std::vector<std::size_t> out;
  if (labels_.empty()) return out;
  collect(merges_.empty() ? 0 : leaf_count() + merges_.size() - 1, out);
  return out;
}

std::vector<std::size_t> Dendrogram::leaves_under(std::size_t merge_index) const {
  if (merge_index >= merges_.size()) throw DataError("merge index out of range");
  std::vector<std::size_t> out;
  collect(leaf_count() + merge_index, out);
  return out;
}

Dendrogram Dendrogram::swap_subtree(std::size_t merge_index) const {
  if (merge_index >= merges_.size()) throw DataError("merge index out of range");
  Dendrogram out = *this;
  std::swap(out.merges_[merge_index].left, out.merges_[merge_index].right);
  return out;
}

}  // namespace wnet
