// Weighted hubs and authorities with size-corrected hubness / authorityness.
#pragma once

#include <optional>
#include <vector>

#include "wnet/model.hpp"

namespace wnet {

struct HitsOptions {
  double tolerance = 1e-12;
  int max_iterations = 10000;
};

struct HitsResult {
  std::vector<double> authority;  // x
  std::vector<double> hub;        // y
  /// Empty when the corresponding weighted degree is zero.
  std::vector<std::optional<double>> hubness;         // qh
  std::vector<std::optional<double>> authorityness;   // qa
  std::vector<double> out_degree;  // wod
  std::vector<double> in_degree;   // wid
  double total_weight = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Power iteration x <- W^T y, y <- W x from y = (1,...,1), both vectors
/// L2-normalized after every step. Fills hubness/authorityness as well.
/// Non-convergence is reported through `converged`, not thrown.
HitsResult hits(const Network& net, const HitsOptions& options = {});

struct Hubness {
  std::vector<std::optional<double>> hubness;
  std::vector<std::optional<double>> authorityness;
};

/// qa(v) = W y_v / (wod(v) sum y),  qh(v) = W x_v / (wid(v) sum x).
Hubness hubness_authorityness(const std::vector<double>& out_degree,
                              const std::vector<double>& in_degree,
                              const std::vector<double>& authority,
                              const std::vector<double>& hub);

Hubness hubness_authorityness(const Network& net, const HitsResult& res);

}  // namespace wnet
