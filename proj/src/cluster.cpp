#include "wnet/cluster.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace wnet {

Dendrogram ward(const DissimMatrix& d) {
  d.validate(1e-12);
  const std::size_t n = d.size();
  if (n == 0) throw DataError("cannot cluster an empty dissimilarity matrix");

  // Dissimilarities between all nodes (leaves and merges), grown as merges happen.
  const std::size_t total = 2 * n - 1;
  std::vector<double> dist(total * total, 0.0);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) dist[u * total + v] = d(u, v);
  std::vector<double> size(total, 1.0);
  std::vector<std::size_t> active(n);
  std::iota(active.begin(), active.end(), 0);

  std::vector<Merge> merges;
  while (active.size() > 1) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t bi = 0, bj = 1;
    for (std::size_t i = 0; i < active.size(); ++i)
      for (std::size_t j = i + 1; j < active.size(); ++j) {
        const double dij = dist[active[i] * total + active[j]];
        if (dij < best) {
          best = dij;
          bi = i;
          bj = j;
        }
      }
    const std::size_t a = active[bi], b = active[bj];
    const std::size_t created = n + merges.size();
    merges.push_back({a, b, best});
    size[created] = size[a] + size[b];
    for (std::size_t c : active) {
      if (c == a || c == b) continue;
      const double na = size[a], nb = size[b], nc = size[c];
      const double value = ((na + nc) * dist[a * total + c] + (nb + nc) * dist[b * total + c] -
                            nc * dist[a * total + b]) /
                           (na + nb + nc);
      dist[created * total + c] = value;
      dist[c * total + created] = value;
    }
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(bj));
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(bi));
    active.push_back(created);
  }

  // Lance-Williams rounding can leave a later height a few ulps below an
  // earlier one; Ward is reducible so such dips are pure noise.
  for (std::size_t i = 1; i < merges.size(); ++i)
    merges[i].height = std::max(merges[i].height, merges[i - 1].height);
  return Dendrogram(d.labels(), std::move(merges));
}

Dendrogram apply_swaps(Dendrogram d, const std::vector<std::size_t>& merge_indices) {
  for (std::size_t i : merge_indices) d = d.swap_subtree(i);
  return d;
}

int Partition::cluster_count() const {
  return cluster.empty() ? 0 : *std::max_element(cluster.begin(), cluster.end());
}

void Partition::validate() const {
  const int k = cluster_count();
  std::vector<bool> seen(static_cast<std::size_t>(k), false);
  for (int c : cluster) {
    if (c < 1) throw DataError("cluster ids must be >= 1");
    seen[static_cast<std::size_t>(c - 1)] = true;
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw DataError("cluster ids must be dense 1..k");
  if (!names.empty() && names.size() != static_cast<std::size_t>(k))
    throw DataError("cluster name count does not match cluster count");
}

Partition cut(const Dendrogram& d, std::size_t k) {
  const std::size_t n = d.leaf_count();
  if (k < 1 || k > n) throw DataError("cut level k must lie in 1.." + std::to_string(n));

  std::vector<std::size_t> parent(2 * n - 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  const std::size_t kept = n - k;
  for (std::size_t i = 0; i < kept; ++i) {
    const auto& m = d.merges()[i];
    parent[find(m.left)] = n + i;
    parent[find(m.right)] = n + i;
  }

  Partition p;
  p.cluster.assign(n, 0);
  std::vector<int> id_of_root(2 * n - 1, 0);
  int next = 0;
  for (std::size_t leaf : d.leaf_order()) {
    auto& id = id_of_root[find(leaf)];
    if (id == 0) id = ++next;
    p.cluster[leaf] = id;
  }
  return p;
}

Blockmodel blockmodel(const WeightMatrix& m, const Partition& p) {
  if (p.cluster.size() != m.size()) throw DataError("partition does not cover every node");
  p.validate();
  Blockmodel bm;
  bm.k = p.cluster_count();
  const auto cells = static_cast<std::size_t>(bm.k * bm.k);
  std::vector<double> sum(cells, 0.0);
  bm.present.assign(cells, 0);
  for (std::size_t u = 0; u < m.size(); ++u)
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (!m.present(u, v)) continue;
      const auto idx = static_cast<std::size_t>((p.cluster[u] - 1) * bm.k + (p.cluster[v] - 1));
      sum[idx] += m.value(u, v);
      ++bm.present[idx];
    }
  bm.mean.resize(cells);
  for (std::size_t i = 0; i < cells; ++i)
    bm.mean[i] = bm.present[i] ? sum[i] / static_cast<double>(bm.present[i])
                               : std::numeric_limits<double>::quiet_NaN();
  return bm;
}

}  // namespace wnet
