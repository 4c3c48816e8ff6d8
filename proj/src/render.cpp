#include "wnet/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace wnet {

namespace {

std::string fixed(double v, int digits = 2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  std::string s(buf);
  if (s == "-0.00" || s == "-0.000" || s == "-0") s.erase(0, 1);
  return s;
}

std::string hex_color(int r, int g, int b) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
  return buf;
}

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string escape_dot(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

void require_permutation(const std::vector<std::size_t>& order, std::size_t n) {
  if (order.size() != n) throw DataError("order is not a permutation of the matrix nodes");
  std::vector<bool> seen(n, false);
  for (std::size_t v : order) {
    if (v >= n || seen[v]) throw DataError("order is not a permutation of the matrix nodes");
    seen[v] = true;
  }
}

}  // namespace

std::string cell_color(double value, Palette palette, double lo, double hi) {
  if (palette == Palette::Grey) {
    const double t = hi > lo ? (value - lo) / (hi - lo) : 1.0;
    const int g = static_cast<int>(std::lround(255.0 * (1.0 - std::clamp(t, 0.0, 1.0))));
    return hex_color(g, g, g);
  }
  const double limit = std::max(std::abs(lo), std::abs(hi));
  if (value == 0.0 || limit == 0.0) return hex_color(255, 255, 255);
  const double t = std::clamp(std::abs(value) / limit, 0.0, 1.0);
  // Non-zero values keep a visible hue however small.
  const int fade = std::min(254, static_cast<int>(std::lround(255.0 * (1.0 - t))));
  return value > 0.0 ? hex_color(255, fade, fade) : hex_color(fade, fade, 255);
}

std::string matrix_svg(const WeightMatrix& m, const std::vector<std::size_t>& order,
                       const MatrixStyle& style, const std::optional<Partition>& partition) {
  const std::size_t n = m.size();
  require_permutation(order, n);
  if (partition && partition->cluster.size() != n)
    throw DataError("partition does not cover every node");

  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (m.present(u, v)) {
        lo = std::min(lo, m.value(u, v));
        hi = std::max(hi, m.value(u, v));
      }

  const int c = style.cell;
  const int margin = style.label_margin;
  const int side = margin + c * static_cast<int>(n) + 2;
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << side
     << "\" height=\"" << side << "\">\n"
     << "<rect x=\"0\" y=\"0\" width=\"" << side << "\" height=\"" << side
     << "\" fill=\"#ffffff\"/>\n"
     << "<g font-family=\"sans-serif\" font-size=\"" << c - 4 << "\">\n";
  for (std::size_t i = 0; i < n; ++i) {
    const auto& label = escape_xml(m.labels()[order[i]]);
    const int pos = margin + c * static_cast<int>(i) + c - 3;
    os << "<text x=\"" << margin - 4 << "\" y=\"" << pos << "\" text-anchor=\"end\">" << label
       << "</text>\n";
    os << "<text transform=\"translate(" << pos << "," << margin - 4
       << ") rotate(-90)\" text-anchor=\"start\">" << label << "</text>\n";
  }
  os << "</g>\n<g class=\"cells\" stroke=\"#d0d0d0\" stroke-width=\"0.5\">\n";
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t u = order[i], v = order[j];
      const bool present = m.present(u, v);
      const std::string fill =
          present ? cell_color(m.value(u, v), style.palette, lo, hi) : kMissingColor;
      os << "<rect class=\"" << (present ? "cell" : "missing") << "\" x=\""
         << margin + c * static_cast<int>(j) << "\" y=\"" << margin + c * static_cast<int>(i)
         << "\" width=\"" << c << "\" height=\"" << c << "\" fill=\"" << fill << "\"/>\n";
    }
  }
  os << "</g>\n";
  if (partition) {
    os << "<g class=\"partition\" stroke=\"#000000\" stroke-width=\"2\">\n";
    const int end = margin + c * static_cast<int>(n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (partition->cluster[order[i]] == partition->cluster[order[i + 1]]) continue;
      const int at = margin + c * static_cast<int>(i + 1);
      os << "<line x1=\"" << margin << "\" y1=\"" << at << "\" x2=\"" << end << "\" y2=\"" << at
         << "\"/>\n";
      os << "<line x1=\"" << at << "\" y1=\"" << margin << "\" x2=\"" << at << "\" y2=\"" << end
         << "\"/>\n";
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string dendrogram_svg(const Dendrogram& d, const DendrogramStyle& style) {
  const std::size_t n = d.leaf_count();
  const auto order = d.leaf_order();
  const double top = d.merges().empty() ? 0.0 : d.merges().back().height;
  const double scale = top > 0.0 ? style.width / top : 0.0;
  const int margin = style.label_margin;

  std::vector<double> x(2 * n - 1, 0.0), y(2 * n - 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) y[order[i]] = style.row * (static_cast<double>(i) + 0.5);
  for (std::size_t i = 0; i < d.merges().size(); ++i) {
    const auto& m = d.merges()[i];
    x[n + i] = m.height * scale;
    y[n + i] = (y[m.left] + y[m.right]) / 2.0;
  }

  const int width = margin + style.width + 20;
  const int height = style.row * static_cast<int>(n) + 30;
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
     << "\" height=\"" << height << "\">\n"
     << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
     << "\" fill=\"#ffffff\"/>\n"
     << "<g font-family=\"sans-serif\" font-size=\"" << style.row - 4 << "\">\n";
  for (std::size_t i = 0; i < n; ++i)
    os << "<text class=\"leaf\" x=\"" << margin - 4 << "\" y=\"" << fixed(y[order[i]] + 4)
       << "\" text-anchor=\"end\">" << escape_xml(d.labels()[order[i]]) << "</text>\n";
  os << "</g>\n<g class=\"tree\" stroke=\"#000000\" stroke-width=\"1\" fill=\"none\">\n";
  for (std::size_t i = 0; i < d.merges().size(); ++i) {
    const auto& m = d.merges()[i];
    const double mx = margin + x[n + i];
    os << "<path class=\"merge\" data-height=\"" << fixed(m.height, 6) << "\" d=\"M"
       << fixed(margin + x[m.left]) << "," << fixed(y[m.left]) << " H" << fixed(mx) << " V"
       << fixed(y[m.right]) << " H" << fixed(margin + x[m.right]) << "\"/>\n";
  }
  os << "</g>\n";
  // Axis with five ticks.
  const double axis_y = style.row * static_cast<double>(n) + 8;
  os << "<g class=\"axis\" font-family=\"sans-serif\" font-size=\"9\" stroke=\"#000000\">\n"
     << "<line x1=\"" << margin << "\" y1=\"" << fixed(axis_y) << "\" x2=\""
     << margin + style.width << "\" y2=\"" << fixed(axis_y) << "\"/>\n";
  for (int t = 0; t <= 4; ++t) {
    const double h = top * t / 4.0;
    const double value = style.level_max ? *style.level_max - h : h;
    const double tx = margin + h * scale;
    os << "<text x=\"" << fixed(tx) << "\" y=\"" << fixed(axis_y + 12)
       << "\" text-anchor=\"middle\" stroke=\"none\">" << fixed(value, 1) << "</text>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

std::string skeleton_dot(const Network& net, const DotStyle& style) {
  double top = 0.0;
  for (const auto& a : net.arcs()) top = std::max(top, std::pow(a.weight, style.power));
  std::ostringstream os;
  os << "digraph wnet {\n  node [shape=ellipse];\n";
  for (std::size_t v = 0; v < net.node_count(); ++v)
    os << "  n" << v + 1 << " [label=\"" << escape_dot(net.short_name(v)) << "\"];\n";
  for (const auto& a : net.arcs()) {
    const double pen = top > 0.0 ? style.max_penwidth * std::pow(a.weight, style.power) / top : 1.0;
    os << "  n" << a.source + 1 << " -> n" << a.target + 1 << " [penwidth=" << fixed(pen, 3)
       << ", wnet_weight=\"" << fixed(a.weight, 6) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace wnet
