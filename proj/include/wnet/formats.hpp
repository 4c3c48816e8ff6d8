// Text exchange formats for intermediate results.
//
// Matrix:
//   #wnet-matrix v1
//   ,A,B
//   A,NA,3
//   B,1.5,0
// Missing cells are written as NA; numbers use the shortest round-trip form.
//
// Dendrogram (merge ids follow the R hclust convention: -i is leaf i, +j is
// merge j, both 1-based):
//   #wnet-dendrogram v1
//   leaves 3
//   A
//   B
//   C
//   merges 2
//   -1 -2 0.5
//   -3 1 2
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "wnet/dendrogram.hpp"
#include "wnet/dissim.hpp"
#include "wnet/model.hpp"

namespace wnet {

inline constexpr const char* kMatrixHeader = "#wnet-matrix v1";
inline constexpr const char* kDendrogramHeader = "#wnet-dendrogram v1";

std::string write_matrix(const WeightMatrix& m);
WeightMatrix read_matrix(std::istream& in);

/// Dissimilarities share the matrix format (every cell present).
std::string write_dissim(const DissimMatrix& d);
DissimMatrix read_dissim(std::istream& in);

std::string write_dendrogram(const Dendrogram& d);
Dendrogram read_dendrogram(std::istream& in);

/// Whitespace-separated 1-based merge numbers; '#' starts a comment.
/// Returns 0-based merge indices.
std::vector<std::size_t> read_swap_script(std::istream& in);

}  // namespace wnet
