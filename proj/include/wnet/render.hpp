// Static outputs: SVG matrix heatmaps and dendrograms, Graphviz DOT skeletons.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wnet/cluster.hpp"
#include "wnet/dendrogram.hpp"
#include "wnet/model.hpp"

namespace wnet {

enum class Palette {
  Grey,       // min -> white, max -> black
  Diverging,  // negative -> blue, 0 -> white, positive -> red
};

inline constexpr const char* kMissingColor = "#ffff00";

struct MatrixStyle {
  Palette palette = Palette::Grey;
  int cell = 14;
  int label_margin = 110;
};

/// Fill colour of a present value under the palette limits.
std::string cell_color(double value, Palette palette, double lo, double hi);

/// Heatmap with rows and columns permuted by `order` (a permutation of node
/// indices). Missing cells are yellow; partition changes along the order are
/// drawn as heavy lines.
std::string matrix_svg(const WeightMatrix& m, const std::vector<std::size_t>& order,
                       const MatrixStyle& style = {},
                       const std::optional<Partition>& partition = std::nullopt);

struct DendrogramStyle {
  /// When set, axis ticks show level_max - height (core expansion levels).
  std::optional<double> level_max;
  int row = 14;
  int width = 420;
  int label_margin = 110;
};

std::string dendrogram_svg(const Dendrogram& d, const DendrogramStyle& style = {});

struct DotStyle {
  double power = 0.1;         // pen width follows w^power
  double max_penwidth = 6.0;
};

/// One node per vertex (labelled by its short name), one edge per arc sorted by
/// (source, target), pen width proportional to the transformed weight.
std::string skeleton_dot(const Network& net, const DotStyle& style = {});

}  // namespace wnet
