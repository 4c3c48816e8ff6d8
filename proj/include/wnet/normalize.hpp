// Balassa index and activity (log2 of measured / expected) normalization.
#pragma once

#include "wnet/model.hpp"

namespace wnet {

/// A(u,v) = w[u,v] W / (wod(u) wid(v)) with marginals over present cells.
WeightMatrix balassa(const WeightMatrix& m);

/// log2 A(u,v). Present cells with zero weight become missing and are
/// reported through `warnings`.
WeightMatrix activity(const WeightMatrix& m, Warnings* warnings = nullptr);

}  // namespace wnet
