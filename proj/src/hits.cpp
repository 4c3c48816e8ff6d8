#include "wnet/hits.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace wnet {

namespace {

void normalize_l2(std::vector<double>& v) {
  const double norm = std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
  if (norm > 0.0)
    for (double& x : v) x /= norm;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace

HitsResult hits(const Network& net, const HitsOptions& options) {
  if (net.arc_count() == 0) throw DataError("hubs and authorities need at least one arc");
  const std::size_t n = net.node_count();

  HitsResult res;
  res.out_degree = weighted_degrees(net, DegreeMode::Out);
  res.in_degree = weighted_degrees(net, DegreeMode::In);
  res.total_weight = net.total_weight();
  if (!(res.total_weight > 0.0)) throw DataError("total arc weight is zero");

  std::vector<double> x(n, 0.0);
  std::vector<double> y(n, 1.0);
  normalize_l2(y);
  std::vector<double> x_next(n), y_next(n);
  for (res.iterations = 1; res.iterations <= options.max_iterations; ++res.iterations) {
    std::fill(x_next.begin(), x_next.end(), 0.0);
    for (const auto& a : net.arcs()) x_next[a.target] += a.weight * y[a.source];
    normalize_l2(x_next);
    std::fill(y_next.begin(), y_next.end(), 0.0);
    for (const auto& a : net.arcs()) y_next[a.source] += a.weight * x_next[a.target];
    normalize_l2(y_next);

    const double change = std::max(max_abs_diff(x, x_next), max_abs_diff(y, y_next));
    x.swap(x_next);
    y.swap(y_next);
    if (change < options.tolerance) {
      res.converged = true;
      break;
    }
  }
  res.iterations = std::min(res.iterations, options.max_iterations);
  res.authority = std::move(x);
  res.hub = std::move(y);

  auto q = hubness_authorityness(res.out_degree, res.in_degree, res.authority, res.hub);
  res.hubness = std::move(q.hubness);
  res.authorityness = std::move(q.authorityness);
  return res;
}

Hubness hubness_authorityness(const std::vector<double>& out_degree,
                              const std::vector<double>& in_degree,
                              const std::vector<double>& authority,
                              const std::vector<double>& hub) {
  const std::size_t n = out_degree.size();
  if (in_degree.size() != n || authority.size() != n || hub.size() != n)
    throw DataError("hubness inputs differ in length");
  const double total = std::accumulate(out_degree.begin(), out_degree.end(), 0.0);
  if (!(total > 0.0)) throw DataError("total arc weight is zero");
  const double sum_x = std::accumulate(authority.begin(), authority.end(), 0.0);
  const double sum_y = std::accumulate(hub.begin(), hub.end(), 0.0);

  Hubness out;
  out.hubness.resize(n);
  out.authorityness.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (out_degree[v] > 0.0 && sum_y > 0.0)
      out.authorityness[v] = total * hub[v] / (out_degree[v] * sum_y);
    if (in_degree[v] > 0.0 && sum_x > 0.0)
      out.hubness[v] = total * authority[v] / (in_degree[v] * sum_x);
  }
  return out;
}

Hubness hubness_authorityness(const Network& net, const HitsResult& res) {
  return hubness_authorityness(weighted_degrees(net, DegreeMode::Out),
                               weighted_degrees(net, DegreeMode::In), res.authority, res.hub);
}

}  // namespace wnet
