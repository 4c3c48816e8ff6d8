#include "wnet/skeleton.hpp"

#include <algorithm>
#include <cmath>

namespace wnet {

Network k_neighbors(const Network& net, std::size_t k, Direction direction) {
  if (k == 0) throw DataError("k must be at least 1");
  const std::size_t n = net.node_count();
  // Candidate arcs grouped by the choosing node.
  std::vector<std::vector<Arc>> choices(n);
  for (const auto& a : net.arcs()) {
    if (a.source == a.target) continue;
    choices[direction == Direction::Out ? a.source : a.target].push_back(a);
  }
  std::vector<Arc> kept;
  for (auto& list : choices) {
    const auto other = [direction](const Arc& a) {
      return direction == Direction::Out ? a.target : a.source;
    };
    std::sort(list.begin(), list.end(), [&](const Arc& a, const Arc& b) {
      if (a.weight != b.weight) return a.weight > b.weight;
      return other(a) < other(b);
    });
    const auto take = std::min(k, list.size());
    kept.insert(kept.end(), list.begin(), list.begin() + static_cast<std::ptrdiff_t>(take));
  }
  return Network(net.nodes(), std::move(kept));
}

WeightMatrix sim_to_dissim(const WeightMatrix& m, DissimMethod method) {
  double w_max = -std::numeric_limits<double>::infinity();
  for (std::size_t u = 0; u < m.size(); ++u)
    for (std::size_t v = 0; v < m.size(); ++v)
      if (m.present(u, v)) w_max = std::max(w_max, m.value(u, v));

  WeightMatrix out(m.size(), m.labels());
  for (std::size_t u = 0; u < m.size(); ++u) {
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (!m.present(u, v)) continue;
      const double w = m.value(u, v);
      if (method == DissimMethod::Subtract) {
        out.set(u, v, w_max - w);
      } else {
        if (!(w > 0.0))
          throw DataError("ratio dissimilarity of a zero weight at (" + m.labels()[u] + ", " +
                          m.labels()[v] + ")");
        out.set(u, v, w_max / w);
      }
    }
  }
  return out;
}

double minkowski_combine(double a, double b, double r) {
  const double m = std::max(a, b);
  if (std::isinf(r) || std::isinf(m)) return m;
  if (m == 0.0) return 0.0;
  return m * std::pow(std::pow(a / m, r) + std::pow(b / m, r), 1.0 / r);
}

std::vector<std::vector<bool>> pathfinder(const WeightMatrix& dissimilarity,
                                          const PathfinderParams& params) {
  const std::size_t n = dissimilarity.size();
  if (!(params.r >= 1.0)) throw DataError("Pathfinder r must be >= 1");
  const std::size_t q = params.q == 0 ? std::max<std::size_t>(n, 3) - 1 : params.q;
  if (q < 2) throw DataError("Pathfinder q must be >= 2");

  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> direct(n * n, kInf);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u == v || !dissimilarity.present(u, v)) continue;
      const double d = dissimilarity.value(u, v);
      if (!(d >= 0.0)) throw DataError("Pathfinder needs non-negative dissimilarities");
      direct[u * n + v] = d;
    }
  }

  // best[u][v]: lightest u-v walk with at most `len` arcs.
  std::vector<double> best = direct;
  std::vector<double> next(n * n);
  for (std::size_t len = 2; len <= q; ++len) {
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) {
        double b = best[u * n + v];
        for (std::size_t t = 0; t < n; ++t) {
          const double head = best[u * n + t];
          const double tail = direct[t * n + v];
          if (std::isinf(head) || std::isinf(tail)) continue;
          b = std::min(b, minkowski_combine(head, tail, params.r));
        }
        next[u * n + v] = b;
      }
    }
    if (next == best) break;
    best.swap(next);
  }

  std::vector<std::vector<bool>> keep(n, std::vector<bool>(n, false));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      const double d = direct[u * n + v];
      if (!std::isinf(d)) keep[u][v] = d <= best[u * n + v] * (1.0 + kPathfinderEpsilon);
    }
  return keep;
}

Network filter_arcs(const Network& net, const std::vector<std::vector<bool>>& mask) {
  std::vector<Arc> arcs;
  for (const auto& a : net.arcs())
    if (mask.at(a.source).at(a.target)) arcs.push_back(a);
  return Network(net.nodes(), std::move(arcs));
}

}  // namespace wnet
