#include "wnet/pajek_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <map>
#include <set>
#include <sstream>

namespace wnet {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

struct Line {
  std::size_t number;
  std::string text;
};

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::string strip_bom(std::string s) {
  if (s.starts_with("\xEF\xBB\xBF")) s.erase(0, 3);
  return s;
}

// Non-blank, non-comment lines with CR stripped.
std::vector<Line> content_lines(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::string t = trim(number == 1 ? strip_bom(raw) : raw);
    if (t.empty() || t.front() == '%') continue;
    out.push_back({number, std::move(t)});
  }
  return out;
}

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string tok; is >> tok;) out.push_back(tok);
  return out;
}

std::optional<double> parse_double(std::string_view s) {
  double v = 0.0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::optional<long long> parse_integer(std::string_view s) {
  long long v = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

bool is_section(const Line& line) { return line.text.front() == '*'; }

std::size_t parse_vertices_header(const Line& line) {
  auto tok = tokens(line.text);
  if (tok.size() < 2 || lower(tok[0]) != "*vertices")
    throw ParseError(line.number, "expected '*Vertices n' header");
  auto n = parse_integer(tok[1]);
  if (!n || *n < 0) throw ParseError(line.number, "invalid vertex count '" + tok[1] + "'");
  return static_cast<std::size_t>(*n);
}

std::size_t parse_node_id(const Line& line, std::string_view tok, std::size_t n) {
  auto id = parse_integer(tok);
  if (!id) throw ParseError(line.number, "invalid node id '" + std::string(tok) + "'");
  if (*id < 1 || static_cast<std::size_t>(*id) > n)
    throw ParseError(line.number,
                     "node id " + std::string(tok) + " out of range 1.." + std::to_string(n));
  return static_cast<std::size_t>(*id - 1);
}

// Text of a label field: the quoted string, or the next whitespace-free token.
std::string take_label(const Line& line, std::string_view rest) {
  rest = rest.substr(std::min(rest.size(), rest.find_first_not_of(" \t")));
  if (rest.empty()) return {};
  if (rest.front() == '"') {
    const auto close = rest.find('"', 1);
    if (close == std::string_view::npos) throw ParseError(line.number, "unterminated quoted label");
    return std::string(rest.substr(1, close - 1));
  }
  return std::string(rest.substr(0, rest.find_first_of(" \t")));
}

enum class Section { None, Arcs, Edges };

// Vertex block framing shared by .vec, .clu and .nam files.
std::vector<Line> framed_body(std::istream& in, const char* what) {
  auto lines = content_lines(in);
  if (lines.empty()) throw ParseError(0, std::string("empty ") + what + " file");
  const std::size_t n = parse_vertices_header(lines.front());
  std::vector<Line> body(lines.begin() + 1, lines.end());
  if (body.empty()) throw ParseError(lines.front().number, std::string("empty ") + what + " body");
  if (body.size() != n)
    throw ParseError(body.back().number, "header announces " + std::to_string(n) +
                                             " values but file has " + std::to_string(body.size()));
  return body;
}

std::string vertices_header(std::size_t n) { return "*Vertices " + std::to_string(n) + "\n"; }

}  // namespace

std::string format_number(double value) {
  char buf[512];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed);
  if (ec != std::errc{}) {
    std::ostringstream os;
    os.precision(17);
    os << value;
    return os.str();
  }
  std::string s(buf, ptr);
  return s == "-0" ? "0" : s;
}

Network read_net(std::istream& in, Warnings* warnings) {
  auto lines = content_lines(in);
  if (lines.empty()) throw ParseError(0, "empty network file");
  const std::size_t n = parse_vertices_header(lines.front());

  std::vector<NodeRecord> nodes(n);
  for (std::size_t v = 0; v < n; ++v) {
    nodes[v].label = std::to_string(v + 1);
    nodes[v].original_index = v;
  }
  std::vector<bool> seen(n, false);
  std::map<std::pair<std::size_t, std::size_t>, double> weights;
  Section section = Section::None;
  bool warned_edges = false;

  auto add_arc = [&](const Line& line, std::size_t u, std::size_t v, double w) {
    auto [it, inserted] = weights.try_emplace({u, v}, w);
    if (!inserted) {
      it->second += w;
      if (warnings)
        warnings->push_back("line " + std::to_string(line.number) + ": duplicate arc " +
                            std::to_string(u + 1) + " " + std::to_string(v + 1) + " summed");
    }
  };

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (is_section(line)) {
      const auto keyword = lower(tokens(line.text).front());
      if (keyword == "*arcs") {
        section = Section::Arcs;
      } else if (keyword == "*edges") {
        section = Section::Edges;
      } else {
        throw ParseError(line.number, "unsupported section '" + tokens(line.text).front() + "'");
      }
      continue;
    }
    if (section == Section::None) {
      const auto space = line.text.find_first_of(" \t");
      const std::string_view id_tok = std::string_view(line.text).substr(0, space);
      const std::size_t v = parse_node_id(line, id_tok, n);
      if (seen[v]) throw ParseError(line.number, "vertex " + std::string(id_tok) + " listed twice");
      seen[v] = true;
      if (space != std::string::npos) {
        auto label = take_label(line, std::string_view(line.text).substr(space));
        if (!label.empty()) nodes[v].label = std::move(label);
      }
      continue;
    }

    auto tok = tokens(line.text);
    if (tok.size() < 2) throw ParseError(line.number, "expected 'source target [weight]'");
    const std::size_t u = parse_node_id(line, tok[0], n);
    const std::size_t v = parse_node_id(line, tok[1], n);
    double w = 1.0;
    if (tok.size() >= 3) {
      auto parsed = parse_double(tok[2]);
      if (!parsed) throw ParseError(line.number, "non-numeric weight '" + tok[2] + "'");
      if (*parsed < 0.0) throw ParseError(line.number, "negative weight " + tok[2]);
      w = *parsed;
    }
    add_arc(line, u, v, w);
    if (section == Section::Edges) {
      if (u != v) add_arc(line, v, u, w);
      if (!warned_edges && warnings) {
        warnings->push_back("line " + std::to_string(line.number) +
                            ": *Edges read as pairs of reciprocal arcs");
        warned_edges = true;
      }
    }
  }

  std::vector<Arc> arcs;
  arcs.reserve(weights.size());
  for (const auto& [key, w] : weights) arcs.push_back({key.first, key.second, w});
  return Network(std::move(nodes), std::move(arcs));
}

std::string write_net(const Network& net) {
  std::string out = vertices_header(net.node_count());
  for (std::size_t v = 0; v < net.node_count(); ++v) {
    std::string label = net.node(v).label;
    std::replace(label.begin(), label.end(), '"', '\'');
    out += std::to_string(v + 1) + " \"" + label + "\"\n";
  }
  out += "*Arcs\n";
  for (const auto& a : net.arcs())
    out += std::to_string(a.source + 1) + " " + std::to_string(a.target + 1) + " " +
           format_number(a.weight) + "\n";
  return out;
}

std::vector<double> read_vec(std::istream& in) {
  std::vector<double> out;
  for (const auto& line : framed_body(in, "vector")) {
    auto v = parse_double(tokens(line.text).front());
    if (!v) throw ParseError(line.number, "non-numeric value '" + line.text + "'");
    out.push_back(*v);
  }
  return out;
}

std::string write_vec(const std::vector<double>& values) {
  std::string out = vertices_header(values.size());
  for (double v : values) out += format_number(v) + "\n";
  return out;
}

std::vector<int> read_clu(std::istream& in) {
  std::vector<int> out;
  for (const auto& line : framed_body(in, "partition")) {
    auto v = parse_integer(tokens(line.text).front());
    if (!v) throw ParseError(line.number, "non-integer cluster id '" + line.text + "'");
    if (*v < 1) throw ParseError(line.number, "cluster ids must be >= 1");
    out.push_back(static_cast<int>(*v));
  }
  return out;
}

std::string write_clu(const std::vector<int>& clusters) {
  std::string out = vertices_header(clusters.size());
  for (int c : clusters) out += std::to_string(c) + "\n";
  return out;
}

std::vector<std::string> read_nam(std::istream& in) {
  std::vector<std::string> out;
  for (const auto& line : framed_body(in, "name")) {
    // Either a bare name, a quoted name, or `id "name"`.
    const auto open = line.text.find('"');
    if (open == std::string::npos) {
      out.push_back(line.text);
    } else {
      out.push_back(take_label(line, std::string_view(line.text).substr(open)));
    }
  }
  return out;
}

Network attach_iso2(const Network& net, const std::vector<std::string>& codes) {
  if (codes.size() != net.node_count())
    throw DataError("name list has " + std::to_string(codes.size()) + " entries for " +
                    std::to_string(net.node_count()) + " nodes");
  auto nodes = net.nodes();
  for (std::size_t v = 0; v < nodes.size(); ++v) nodes[v].iso2 = codes[v];
  return net.with_nodes(std::move(nodes));
}

Network attach_population(const Network& net, const std::vector<double>& values) {
  if (values.size() != net.node_count())
    throw DataError("vector has " + std::to_string(values.size()) + " entries for " +
                    std::to_string(net.node_count()) + " nodes");
  auto nodes = net.nodes();
  for (std::size_t v = 0; v < nodes.size(); ++v) {
    if (values[v] < 0.0) throw DataError("negative population");
    nodes[v].population = static_cast<long long>(values[v] + 0.5);
  }
  return net.with_nodes(std::move(nodes));
}

std::vector<std::string> split_csv_record(const std::string& line, char delimiter) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == delimiter) {
      fields.push_back(trim(field));
      field.clear();
    } else if (c != '\r') {
      field += c;
    }
  }
  fields.push_back(trim(field));
  return fields;
}

namespace {

std::size_t count_unquoted(const std::string& line, char c) {
  std::size_t count = 0;
  bool quoted = false;
  for (char ch : line) {
    if (ch == '"') quoted = !quoted;
    else if (!quoted && ch == c) ++count;
  }
  return count;
}

// Physical lines joined while a quoted field is still open.
std::vector<Line> csv_records(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  std::size_t number = 0;
  std::string pending;
  std::size_t start = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (number == 1) raw = strip_bom(raw);
    if (pending.empty()) {
      start = number;
      pending = raw;
    } else {
      pending += "\n" + raw;
    }
    if (std::count(pending.begin(), pending.end(), '"') % 2 == 0) {
      if (!trim(pending).empty()) out.push_back({start, pending});
      pending.clear();
    }
  }
  if (!pending.empty()) throw ParseError(start, "unterminated quoted field");
  return out;
}

std::size_t resolve_column(const ColumnRef& ref, const std::vector<std::string>& header,
                           std::size_t line) {
  if (const auto* index = std::get_if<std::size_t>(&ref)) return *index;
  const auto& name = std::get<std::string>(ref);
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return i;
  throw ParseError(line, "missing column '" + name + "'");
}

}  // namespace

Network ingest_csv(std::istream& in, const CsvColumns& columns, Warnings* warnings) {
  auto records = csv_records(in);
  if (records.empty()) throw ParseError(0, "empty CSV input");

  char delimiter = ',';
  if (columns.delimiter) {
    delimiter = *columns.delimiter;
  } else {
    std::size_t best = 0;
    for (char c : {',', ';', '\t'}) {
      const auto count = count_unquoted(records.front().text, c);
      if (count > best) {
        best = count;
        delimiter = c;
      }
    }
  }

  const bool named = std::holds_alternative<std::string>(columns.source) ||
                     std::holds_alternative<std::string>(columns.target) ||
                     std::holds_alternative<std::string>(columns.count);
  const auto first = split_csv_record(records.front().text, delimiter);
  std::size_t body_start = 0;
  if (named) {
    body_start = 1;
  } else {
    const auto count_col = std::get<std::size_t>(columns.count);
    if (count_col < first.size() && !parse_double(first[count_col])) body_start = 1;
  }
  const std::size_t line0 = records.front().number;
  const std::size_t src_col = resolve_column(columns.source, first, line0);
  const std::size_t dst_col = resolve_column(columns.target, first, line0);
  const std::size_t cnt_col = resolve_column(columns.count, first, line0);
  const std::size_t needed = std::max({src_col, dst_col, cnt_col}) + 1;

  std::map<std::pair<std::string, std::string>, double> flows;
  std::set<std::string> labels;
  for (std::size_t r = body_start; r < records.size(); ++r) {
    const auto fields = split_csv_record(records[r].text, delimiter);
    if (fields.size() < needed)
      throw ParseError(records[r].number, "missing column (row has " +
                                              std::to_string(fields.size()) + " fields)");
    auto count = parse_double(fields[cnt_col]);
    if (!count) throw ParseError(records[r].number, "non-numeric count '" + fields[cnt_col] + "'");
    if (*count < 0.0) throw ParseError(records[r].number, "negative count " + fields[cnt_col]);
    labels.insert(fields[src_col]);
    labels.insert(fields[dst_col]);
    auto [it, inserted] = flows.try_emplace({fields[src_col], fields[dst_col]}, *count);
    if (!inserted) it->second += *count;
  }
  if (labels.size() < 2) throw DataError("fewer than 2 distinct countries in CSV input");

  std::vector<NodeRecord> nodes;
  std::map<std::string, std::size_t> index;
  for (const auto& label : labels) {
    index[label] = nodes.size();
    nodes.push_back({label, {}, std::nullopt, nodes.size()});
  }
  std::vector<Arc> arcs;
  std::size_t dropped = 0;
  for (const auto& [pair, w] : flows) {
    if (w == 0.0) {
      ++dropped;
      continue;
    }
    arcs.push_back({index[pair.first], index[pair.second], w});
  }
  if (dropped > 0 && warnings)
    warnings->push_back(std::to_string(dropped) + " pair(s) with zero total count dropped");
  return Network(std::move(nodes), std::move(arcs));
}

}  // namespace wnet
