// Ward clustering, dendrogram cuts and blockmodel summaries.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wnet/dendrogram.hpp"
#include "wnet/dissim.hpp"
#include "wnet/model.hpp"

namespace wnet {

/// Ward agglomeration on the given dissimilarities (used as-is, not squared),
/// via the Lance-Williams update
///   d(a+b, c) = ((na+nc) d(a,c) + (nb+nc) d(b,c) - nc d(a,b)) / (na+nb+nc).
/// Ties go to the lexicographically smallest pair of node ids; the smaller id
/// becomes the left child.
Dendrogram ward(const DissimMatrix& d);

/// Applies merge-index swaps in order.
Dendrogram apply_swaps(Dendrogram d, const std::vector<std::size_t>& merge_indices);

struct Partition {
  std::vector<int> cluster;         // per node, dense ids 1..k
  std::vector<std::string> names;   // optional, names[c-1] for cluster c

  int cluster_count() const;
  /// Throws unless ids are dense 1..k and names (if any) number k.
  void validate() const;
};

/// Cuts the top k-1 merges; cluster ids follow first appearance in leaf order.
Partition cut(const Dendrogram& d, std::size_t k);

struct Blockmodel {
  int k = 0;
  std::vector<double> mean;          // k x k, row-major; NaN when the block is empty
  std::vector<std::size_t> present;  // k x k present-cell counts

  double at(int r, int c) const { return mean[static_cast<std::size_t>(r * k + c)]; }
  std::size_t count(int r, int c) const { return present[static_cast<std::size_t>(r * k + c)]; }
  bool empty(int r, int c) const { return count(r, c) == 0; }
};

/// Mean of the present cells of every (row cluster, column cluster) block.
Blockmodel blockmodel(const WeightMatrix& m, const Partition& p);

}  // namespace wnet
