// Monotone weight transformations. Missing cells pass through untouched.
#pragma once

#include <array>
#include <limits>
#include <vector>

#include "wnet/model.hpp"

namespace wnet {

/// w -> w^p, p > 0.
WeightMatrix power_transform(const WeightMatrix& m, double p);

/// w -> ln w; every present value must be positive.
WeightMatrix log_transform(const WeightMatrix& m);

/// Empirical quantile of sorted data with linear interpolation between order
/// statistics at position (size-1)*prob.
double quantile_sorted(const std::vector<double>& sorted, double prob);

/// The 19 cut points Q_1..Q_19 at probabilities i/19 of the present values.
std::array<double, 19> nineteen_quantiles(const WeightMatrix& m);

/// Interval index i(x) = min k with x < Q_k (k in 1..20, Q_20 = +inf).
int quantile_interval(double x, const std::array<double, 19>& cuts);

/// Bins every present cell to ceil(i(x)/2), an integer in 1..10.
/// Needs at least 19 present values.
WeightMatrix quantile_bins(const WeightMatrix& m);

}  // namespace wnet
