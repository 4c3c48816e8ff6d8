#include "wnet/normalize.hpp"

#include <cmath>

namespace wnet {

WeightMatrix balassa(const WeightMatrix& m) {
  const std::size_t n = m.size();
  std::vector<double> out_deg(n, 0.0), in_deg(n, 0.0);
  double total = 0.0;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (m.present(u, v)) {
        out_deg[u] += m.value(u, v);
        in_deg[v] += m.value(u, v);
        total += m.value(u, v);
      }

  WeightMatrix out(n, m.labels());
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      if (!m.present(u, v)) continue;
      if (!(out_deg[u] > 0.0) || !(in_deg[v] > 0.0))
        throw DataError("Balassa index undefined at (" + m.labels()[u] + ", " + m.labels()[v] +
                        "): zero marginal");
      out.set(u, v, m.value(u, v) * total / (out_deg[u] * in_deg[v]));
    }
  return out;
}

WeightMatrix activity(const WeightMatrix& m, Warnings* warnings) {
  WeightMatrix a = balassa(m);
  for (std::size_t u = 0; u < a.size(); ++u)
    for (std::size_t v = 0; v < a.size(); ++v) {
      if (!a.present(u, v)) continue;
      if (a.value(u, v) > 0.0) {
        a.set(u, v, std::log2(a.value(u, v)));
      } else {
        a.clear(u, v);
        if (warnings)
          warnings->push_back("zero weight at (" + a.labels()[u] + ", " + a.labels()[v] +
                              ") treated as missing in the activity matrix");
      }
    }
  return a;
}

}  // namespace wnet
