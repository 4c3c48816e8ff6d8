#include "wnet/dissim.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace wnet {

DissimMatrix::DissimMatrix(std::size_t n, std::vector<std::string> labels, std::string method)
    : n_(n), d_(n * n, 0.0), labels_(std::move(labels)), method_(std::move(method)) {
  if (labels_.size() != n_) throw DataError("dissimilarity label count does not match dimension");
}

void DissimMatrix::set(std::size_t u, std::size_t v, double value) {
  d_.at(u * n_ + v) = value;
  d_.at(v * n_ + u) = value;
}

void DissimMatrix::validate(double tolerance) const {
  for (std::size_t u = 0; u < n_; ++u) {
    if (std::abs((*this)(u, u)) > tolerance)
      throw DataError("dissimilarity diagonal must be zero (row " + labels_[u] + ")");
    for (std::size_t v = 0; v < n_; ++v) {
      const double d = (*this)(u, v);
      if (!std::isfinite(d)) throw DataError("non-finite dissimilarity");
      if (d < -tolerance) throw DataError("negative dissimilarity");
      if (std::abs(d - (*this)(v, u)) > tolerance)
        throw DataError("dissimilarity matrix is not symmetric at (" + labels_[u] + ", " +
                        labels_[v] + ")");
    }
  }
}

std::string to_string(RowMethod method) {
  switch (method) {
    case RowMethod::Euclid: return "euclid";
    case RowMethod::CorrectedEuclid: return "corrected_euclid";
    case RowMethod::Salton1m: return "salton_1m";
    case RowMethod::SaltonAcos: return "salton_acos";
    case RowMethod::CorrectedSalton1m: return "corrected_salton_1m";
    case RowMethod::CorrectedSaltonAcos: return "corrected_salton_acos";
  }
  return "unknown";
}

std::string to_string(LinkMethod method) { return method == LinkMethod::D1 ? "D1" : "D2"; }

namespace {

// Cell pairs compared between rows u and v. `corrected` pairs w[u,u] with
// w[v,v] and w[u,v] with w[v,u]; otherwise column t is paired with column t.
template <typename F>
void for_each_pair(const WeightMatrix& m, std::size_t u, std::size_t v, bool corrected,
                   MissingPolicy policy, F f) {
  const std::size_t n = m.size();
  auto visit = [&](std::size_t ur, std::size_t uc, std::size_t vr, std::size_t vc) {
    if (policy == MissingPolicy::Pairwise && (!m.present(ur, uc) || !m.present(vr, vc))) return;
    f(m.value(ur, uc), m.value(vr, vc));
  };
  for (std::size_t t = 0; t < n; ++t) {
    if (corrected && u != v && (t == u || t == v)) continue;
    visit(u, t, v, t);
  }
  if (corrected && u != v) {
    visit(u, u, v, v);
    visit(u, v, v, u);
  }
}

void require_present_row(const WeightMatrix& m, std::size_t u) {
  for (std::size_t t = 0; t < m.size(); ++t)
    if (m.present(u, t)) return;
  throw DataError("row " + m.labels()[u] + " has no present cells");
}

double cosine(const WeightMatrix& m, std::size_t u, std::size_t v, bool corrected,
              MissingPolicy policy) {
  require_present_row(m, u);
  require_present_row(m, v);
  double dot = 0.0, uu = 0.0, vv = 0.0;
  for_each_pair(m, u, v, corrected, policy, [&](double a, double b) {
    dot += a * b;
    uu += a * a;
    vv += b * b;
  });
  if (!(uu > 0.0) || !(vv > 0.0))
    throw DataError("Salton index of a zero row (" + m.labels()[uu > 0.0 ? v : u] + ")");
  return std::clamp(dot / std::sqrt(uu * vv), -1.0, 1.0);
}

double euclid(const WeightMatrix& m, std::size_t u, std::size_t v, bool corrected,
              MissingPolicy policy) {
  require_present_row(m, u);
  require_present_row(m, v);
  double sum = 0.0;
  for_each_pair(m, u, v, corrected, policy, [&](double a, double b) { sum += (a - b) * (a - b); });
  return std::sqrt(sum);
}

}  // namespace

double salton_pair(const WeightMatrix& m, std::size_t u, std::size_t v, MissingPolicy policy) {
  return cosine(m, u, v, false, policy);
}

double corrected_salton_pair(const WeightMatrix& m, std::size_t u, std::size_t v,
                             MissingPolicy policy) {
  return cosine(m, u, v, true, policy);
}

DissimMatrix row_dissimilarity(const WeightMatrix& m, RowMethod method, MissingPolicy policy) {
  const std::size_t n = m.size();
  DissimMatrix out(n, m.labels(), to_string(method));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      double d = 0.0;
      switch (method) {
        case RowMethod::Euclid: d = euclid(m, u, v, false, policy); break;
        case RowMethod::CorrectedEuclid: d = euclid(m, u, v, true, policy); break;
        case RowMethod::Salton1m: d = 1.0 - cosine(m, u, v, false, policy); break;
        case RowMethod::SaltonAcos:
          d = std::acos(cosine(m, u, v, false, policy)) / std::numbers::pi;
          break;
        case RowMethod::CorrectedSalton1m: d = 1.0 - cosine(m, u, v, true, policy); break;
        case RowMethod::CorrectedSaltonAcos:
          d = std::acos(cosine(m, u, v, true, policy)) / std::numbers::pi;
          break;
      }
      out.set(u, v, d);
    }
  }
  return out;
}

DissimMatrix link_dissimilarity(const WeightMatrix& m, LinkMethod method) {
  const std::size_t n = m.size();
  DissimMatrix out(n, m.labels(), to_string(method));
  std::vector<double> row_sum(n, 0.0);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) row_sum[u] += m.value(u, v);

  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      const double a = m.value(u, v);
      const double b = m.value(v, u);
      if (method == LinkMethod::D1) {
        const double hi = std::max(a, b);
        if (!(hi > 0.0))
          throw DataError("D1 undefined: no weight between " + m.labels()[u] + " and " +
                          m.labels()[v]);
        out.set(u, v, std::abs(a - b) / hi);
      } else {
        if (!(row_sum[u] > 0.0) || !(row_sum[v] > 0.0))
          throw DataError("D2 undefined: zero row sum");
        out.set(u, v, std::max(a / row_sum[u], b / row_sum[v]));
      }
    }
  }
  return out;
}

}  // namespace wnet
