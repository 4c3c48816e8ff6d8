#include "wnet/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "wnet/pajek_io.hpp"

namespace wnet {

namespace {

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string pad_left(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string pad_right(const std::string& s, std::size_t width) {
  // Width counts bytes; multi-byte labels only shift their own row.
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string optional_value(const std::optional<double>& v, int digits) {
  return v ? fixed(*v, digits) : std::string("NA");
}

std::string names_of(const Network& net, const std::vector<std::size_t>& nodes) {
  std::string out;
  for (std::size_t v : nodes) out += (out.empty() ? "" : " ") + net.short_name(v);
  return out;
}

}  // namespace

std::string info_report(const Network& net) {
  std::ostringstream os;
  os << "nodes: " << net.node_count() << "\n"
     << "arcs: " << net.arc_count() << "\n"
     << "loops: " << net.loop_count() << "\n";
  if (net.node_count() >= 2) {
    os << "density: " << fixed(density(net), 6) << "\n"
       << "density_with_loops: " << fixed(density(net, true), 6) << "\n";
  }
  if (net.arc_count() > 0) {
    const auto range = weight_range(net);
    os << "w_min: " << format_number(range.min) << "\n"
       << "w_max: " << format_number(range.max) << "\n";
  }
  os << "total_weight: " << format_number(net.total_weight()) << "\n";
  std::vector<std::string> missing;
  for (std::size_t u = 0; u < net.node_count(); ++u)
    for (std::size_t v = 0; v < net.node_count(); ++v)
      if (u != v && !net.weight(u, v)) missing.push_back(net.short_name(u) + "->" + net.short_name(v));
  os << "missing_pairs: " << missing.size() << "\n";
  if (!missing.empty() && missing.size() <= 50) {
    os << "missing:";
    for (const auto& m : missing) os << " " << m;
    os << "\n";
  }
  return os.str();
}

std::string hits_table(const Network& net, const HitsResult& res, TableFormat format, bool ansi) {
  std::ostringstream os;
  const std::size_t n = net.node_count();
  if (format == TableFormat::Csv) {
    os << "index,label,iso2,wod,wid,hub,aut,qh,qa\n";
    for (std::size_t v = 0; v < n; ++v) {
      os << v + 1 << "," << csv_field(net.node(v).label) << "," << csv_field(net.node(v).iso2)
         << "," << format_number(res.out_degree[v]) << "," << format_number(res.in_degree[v])
         << "," << format_number(res.hub[v]) << "," << format_number(res.authority[v]) << ","
         << (res.hubness[v] ? format_number(*res.hubness[v]) : "NA") << ","
         << (res.authorityness[v] ? format_number(*res.authorityness[v]) : "NA") << "\n";
    }
    return os.str();
  }
  std::size_t label_width = 5;
  for (const auto& node : net.nodes()) label_width = std::max(label_width, node.label.size());
  const std::string header = pad_left("Ind", 4) + "  " + pad_right("Name", label_width) + "  " +
                             pad_right("ISO2", 4) + "  " + pad_left("Out", 10) + "  " +
                             pad_left("In", 10) + "  " + pad_left("Hub", 9) + "  " +
                             pad_left("Aut", 9) + "  " + pad_left("qh", 6) + "  " +
                             pad_left("qa", 6);
  os << (ansi ? "\x1b[1m" + header + "\x1b[0m" : header) << "\n";
  for (std::size_t v = 0; v < n; ++v) {
    os << pad_left(std::to_string(v + 1), 4) << "  " << pad_right(net.node(v).label, label_width)
       << "  " << pad_right(net.node(v).iso2, 4) << "  "
       << pad_left(format_number(res.out_degree[v]), 10) << "  "
       << pad_left(format_number(res.in_degree[v]), 10) << "  " << pad_left(fixed(res.hub[v], 6), 9)
       << "  " << pad_left(fixed(res.authority[v], 6), 9) << "  "
       << pad_left(optional_value(res.hubness[v], 3), 6) << "  "
       << pad_left(optional_value(res.authorityness[v], 3), 6) << "\n";
  }
  os << "iterations: " << res.iterations << (res.converged ? "" : " (not converged)") << "\n";
  return os.str();
}

std::string core_table(const Network& net, const CoreDecomposition& dec, TableFormat format) {
  std::ostringstream os;
  const auto ranking = core_ranking(dec);
  if (format == TableFormat::Csv) os << "rank,id,value\n";
  for (std::size_t i = 0; i < ranking.size(); ++i) {
    const std::size_t v = ranking[i];
    if (format == TableFormat::Csv) {
      os << i + 1 << "," << csv_field(net.short_name(v)) << ","
         << format_number(dec.core_number[v]) << "\n";
    } else {
      os << pad_left(std::to_string(i + 1), 4) << "  " << pad_right(net.short_name(v), 6) << "  "
         << pad_left(format_number(dec.core_number[v]), 12) << "\n";
    }
  }
  return os.str();
}

std::string core_levels(const Network& net, const CoreDecomposition& dec, std::size_t top) {
  const auto ranking = core_ranking(dec);
  std::ostringstream os;
  std::size_t printed = 0;
  for (std::size_t i = 0; i < ranking.size() && printed < top;) {
    const double level = dec.core_number[ranking[i]];
    std::vector<std::size_t> group;
    while (i < ranking.size() && dec.core_number[ranking[i]] == level) group.push_back(ranking[i++]);
    os << format_number(level) << ": " << names_of(net, group) << "\n";
    ++printed;
  }
  return os.str();
}

std::string blockmodel_table(const Blockmodel& bm, const std::vector<std::string>& names,
                             TableFormat format) {
  std::vector<std::string> labels = names;
  if (labels.size() != static_cast<std::size_t>(bm.k)) {
    labels.clear();
    for (int c = 1; c <= bm.k; ++c) labels.push_back(std::to_string(c));
  }
  std::ostringstream os;
  if (format == TableFormat::Csv) {
    os << "row,column,mean,present\n";
    for (int r = 0; r < bm.k; ++r)
      for (int c = 0; c < bm.k; ++c)
        os << csv_field(labels[r]) << "," << csv_field(labels[c]) << ","
           << (bm.empty(r, c) ? "NA" : format_number(bm.at(r, c))) << "," << bm.count(r, c)
           << "\n";
    return os.str();
  }
  std::size_t width = 8;
  for (const auto& l : labels) width = std::max(width, l.size() + 1);
  os << pad_right("", width);
  for (const auto& l : labels) os << pad_left(l, width);
  os << "\n";
  for (int r = 0; r < bm.k; ++r) {
    os << pad_right(labels[r], width);
    for (int c = 0; c < bm.k; ++c)
      os << pad_left(bm.empty(r, c) ? "NA" : fixed(bm.at(r, c), 3), width);
    os << "\n";
  }
  return os.str();
}

}  // namespace wnet
