// End-to-end analysis recipes for the Erasmus mobility network.
#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "wnet/cluster.hpp"
#include "wnet/model.hpp"

namespace wnet {

inline constexpr const char* kErasmusNet = "ErasmusFlows.net";
inline constexpr const char* kErasmusNam = "ErasmusFlowsISO.nam";
inline constexpr const char* kErasmusVec = "PopTotal.vec";

/// Loads ErasmusFlows.net and, when present, the ISO2 names and population.
Network load_erasmus(const std::filesystem::path& dir, Warnings* warnings = nullptr);

/// The five named clusters Less, Balkan, LieLux, High and Center, keyed by
/// ISO2 code (or the country name when codes are absent).
Partition erasmus_five_clusters(const Network& net);

/// w^0.1 -> corrected Salton dissimilarity (1 - S') -> Ward.
Dendrogram salton_ward(const Network& net);

/// Activity matrix -> corrected Euclidean (pairwise deletion) -> Ward.
Dendrogram activity_ward(const Network& net, Warnings* warnings = nullptr);

/// Writes every table, skeleton, matrix and dendrogram of the analysis into
/// `out_dir`. Returns the list of files written, relative to `out_dir`.
std::vector<std::string> repro_erasmus(const Network& net, const std::filesystem::path& out_dir,
                                       Warnings* warnings = nullptr);

}  // namespace wnet
