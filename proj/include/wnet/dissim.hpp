// Node-by-node dissimilarities from weight-matrix rows, including the
// corrected Euclidean distance and corrected Salton index that compare
// w[u,u] with w[v,v] and w[u,v] with w[v,u] instead of position by position.
#pragma once

#include <string>
#include <vector>

#include "wnet/model.hpp"

namespace wnet {

enum class RowMethod {
  Euclid,
  CorrectedEuclid,
  Salton1m,            // 1 - S
  SaltonAcos,          // arccos(S) / pi
  CorrectedSalton1m,   // 1 - S'
  CorrectedSaltonAcos  // arccos(S') / pi
};

enum class LinkMethod { D1, D2 };

/// How missing cells enter row dissimilarities.
enum class MissingPolicy {
  Zero,      // read as 0 ("no visits")
  Pairwise,  // a term is dropped when either of its cells is missing
};

/// Symmetric dissimilarity matrix with zero diagonal.
class DissimMatrix {
public:
  DissimMatrix() = default;
  DissimMatrix(std::size_t n, std::vector<std::string> labels, std::string method);

  std::size_t size() const { return n_; }
  double operator()(std::size_t u, std::size_t v) const { return d_[u * n_ + v]; }
  /// Sets both (u,v) and (v,u).
  void set(std::size_t u, std::size_t v, double value);

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& method() const { return method_; }

  /// Throws DataError unless the diagonal is zero, the grid symmetric and
  /// every entry finite and non-negative.
  void validate(double tolerance = 0.0) const;

private:
  std::size_t n_ = 0;
  std::vector<double> d_;
  std::vector<std::string> labels_;
  std::string method_;
};

DissimMatrix row_dissimilarity(const WeightMatrix& m, RowMethod method,
                               MissingPolicy policy = MissingPolicy::Zero);

DissimMatrix link_dissimilarity(const WeightMatrix& m, LinkMethod method);

/// Corrected Salton index S'(u,v) in [-1, 1].
double corrected_salton_pair(const WeightMatrix& m, std::size_t u, std::size_t v,
                             MissingPolicy policy = MissingPolicy::Zero);

/// Plain Salton (cosine) index of rows u and v.
double salton_pair(const WeightMatrix& m, std::size_t u, std::size_t v,
                   MissingPolicy policy = MissingPolicy::Zero);

std::string to_string(RowMethod method);
std::string to_string(LinkMethod method);

}  // namespace wnet
