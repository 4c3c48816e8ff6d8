#include "wnet/transforms.hpp"

#include <algorithm>
#include <cmath>

namespace wnet {

namespace {

template <typename F>
WeightMatrix map_present(const WeightMatrix& m, F f) {
  WeightMatrix out(m.size(), m.labels());
  for (std::size_t u = 0; u < m.size(); ++u)
    for (std::size_t v = 0; v < m.size(); ++v)
      if (m.present(u, v)) out.set(u, v, f(m.value(u, v)));
  return out;
}

}  // namespace

WeightMatrix power_transform(const WeightMatrix& m, double p) {
  if (!(p > 0.0)) throw DataError("power exponent must be positive");
  return map_present(m, [p](double w) {
    if (w < 0.0) throw DataError("power transform of a negative weight");
    return std::pow(w, p);
  });
}

WeightMatrix log_transform(const WeightMatrix& m) {
  return map_present(m, [](double w) {
    if (!(w > 0.0)) throw DataError("log transform of a non-positive weight");
    return std::log(w);
  });
}

double quantile_sorted(const std::vector<double>& sorted, double prob) {
  if (sorted.empty()) throw DataError("quantile of an empty sample");
  const double h = static_cast<double>(sorted.size() - 1) * prob;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const auto hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

std::array<double, 19> nineteen_quantiles(const WeightMatrix& m) {
  std::vector<double> values;
  for (std::size_t u = 0; u < m.size(); ++u)
    for (std::size_t v = 0; v < m.size(); ++v)
      if (m.present(u, v)) values.push_back(m.value(u, v));
  if (values.size() < 19) throw DataError("quantile binning needs at least 19 present values");
  std::sort(values.begin(), values.end());
  std::array<double, 19> cuts{};
  for (int i = 1; i <= 19; ++i) cuts[i - 1] = quantile_sorted(values, i / 19.0);
  return cuts;
}

int quantile_interval(double x, const std::array<double, 19>& cuts) {
  for (int k = 1; k <= 19; ++k)
    if (x < cuts[k - 1]) return k;
  return 20;
}

WeightMatrix quantile_bins(const WeightMatrix& m) {
  const auto cuts = nineteen_quantiles(m);
  return map_present(m, [&cuts](double w) {
    return static_cast<double>((quantile_interval(w, cuts) + 1) / 2);
  });
}

}  // namespace wnet
