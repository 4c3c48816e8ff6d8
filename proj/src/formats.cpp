#include "wnet/formats.hpp"

#include <charconv>
#include <istream>
#include <sstream>

#include "wnet/pajek_io.hpp"

namespace wnet {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string strip_cr(std::string s) {
  if (!s.empty() && s.back() == '\r') s.pop_back();
  return s;
}

double parse_cell(const std::string& s, std::size_t line) {
  double v = 0.0;
  std::string_view sv = s;
  if (!sv.empty() && sv.front() == '+') sv.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), v);
  if (ec != std::errc{} || ptr != sv.data() + sv.size())
    throw ParseError(line, "non-numeric matrix cell '" + s + "'");
  return v;
}

std::string format_merge_id(std::size_t id, std::size_t n) {
  return id < n ? "-" + std::to_string(id + 1) : std::to_string(id - n + 1);
}

std::size_t parse_merge_id(const std::string& tok, std::size_t n, std::size_t line) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size() || v == 0)
    throw ParseError(line, "invalid merge reference '" + tok + "'");
  if (v < 0) {
    if (static_cast<std::size_t>(-v) > n) throw ParseError(line, "leaf id out of range");
    return static_cast<std::size_t>(-v - 1);
  }
  return n + static_cast<std::size_t>(v - 1);
}

}  // namespace

std::string write_matrix(const WeightMatrix& m) {
  std::string out = std::string(kMatrixHeader) + "\n";
  for (const auto& label : m.labels()) out += "," + csv_field(label);
  out += "\n";
  for (std::size_t u = 0; u < m.size(); ++u) {
    out += csv_field(m.labels()[u]);
    for (std::size_t v = 0; v < m.size(); ++v)
      out += "," + (m.present(u, v) ? format_number(m.value(u, v)) : std::string("NA"));
    out += "\n";
  }
  return out;
}

WeightMatrix read_matrix(std::istream& in) {
  std::string line;
  std::size_t number = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++number;
      line = strip_cr(line);
      if (!line.empty()) return true;
    }
    return false;
  };
  if (!next_line() || line.rfind(kMatrixHeader, 0) != 0)
    throw ParseError(number, std::string("expected '") + kMatrixHeader + "' header");
  if (!next_line()) throw ParseError(number, "missing column label row");
  auto header = split_csv_record(line, ',');
  if (header.empty()) throw ParseError(number, "missing column label row");
  std::vector<std::string> labels(header.begin() + 1, header.end());
  const std::size_t n = labels.size();

  WeightMatrix m(n, labels);
  for (std::size_t u = 0; u < n; ++u) {
    if (!next_line()) throw ParseError(number, "matrix has fewer rows than columns");
    auto fields = split_csv_record(line, ',');
    if (fields.size() != n + 1)
      throw ParseError(number, "row has " + std::to_string(fields.size() - 1) + " cells, expected " +
                                   std::to_string(n));
    if (fields[0] != labels[u]) throw ParseError(number, "row label '" + fields[0] + "' does not match column label");
    for (std::size_t v = 0; v < n; ++v) {
      if (fields[v + 1] == "NA") continue;
      m.set(u, v, parse_cell(fields[v + 1], number));
    }
  }
  if (next_line()) throw ParseError(number, "unexpected data after the last matrix row");
  return m;
}

std::string write_dissim(const DissimMatrix& d) {
  WeightMatrix m(d.size(), d.labels());
  for (std::size_t u = 0; u < d.size(); ++u)
    for (std::size_t v = 0; v < d.size(); ++v) m.set(u, v, d(u, v));
  return write_matrix(m);
}

DissimMatrix read_dissim(std::istream& in) {
  const WeightMatrix m = read_matrix(in);
  DissimMatrix d(m.size(), m.labels(), "file");
  for (std::size_t u = 0; u < m.size(); ++u)
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (!m.present(u, v)) throw DataError("dissimilarity matrix has a missing cell");
      if (u == v) {
        if (m.value(u, u) != 0.0) throw DataError("dissimilarity diagonal must be zero");
      } else if (m.value(u, v) != m.value(v, u)) {
        throw DataError("dissimilarity matrix is not symmetric");
      } else {
        d.set(u, v, m.value(u, v));
      }
    }
  d.validate();
  return d;
}

std::string write_dendrogram(const Dendrogram& d) {
  const std::size_t n = d.leaf_count();
  std::string out = std::string(kDendrogramHeader) + "\nleaves " + std::to_string(n) + "\n";
  for (const auto& label : d.labels()) out += label + "\n";
  out += "merges " + std::to_string(d.merges().size()) + "\n";
  for (const auto& m : d.merges())
    out += format_merge_id(m.left, n) + " " + format_merge_id(m.right, n) + " " +
           format_number(m.height) + "\n";
  return out;
}

Dendrogram read_dendrogram(std::istream& in) {
  std::string line;
  std::size_t number = 0;
  auto next_line = [&]() {
    if (!std::getline(in, line)) throw ParseError(number, "truncated dendrogram file");
    ++number;
    line = strip_cr(line);
  };
  next_line();
  if (line.rfind(kDendrogramHeader, 0) != 0)
    throw ParseError(number, std::string("expected '") + kDendrogramHeader + "' header");
  next_line();
  std::istringstream head(line);
  std::string word;
  std::size_t n = 0;
  if (!(head >> word >> n) || word != "leaves" || n == 0)
    throw ParseError(number, "expected 'leaves N'");
  std::vector<std::string> labels(n);
  for (auto& label : labels) {
    next_line();
    label = line;
  }
  next_line();
  std::istringstream mh(line);
  std::size_t count = 0;
  if (!(mh >> word >> count) || word != "merges" || count != n - 1)
    throw ParseError(number, "expected 'merges " + std::to_string(n - 1) + "'");
  std::vector<Merge> merges;
  for (std::size_t i = 0; i < count; ++i) {
    next_line();
    std::istringstream ml(line);
    std::string a, b, h;
    if (!(ml >> a >> b >> h)) throw ParseError(number, "expected 'left right height'");
    merges.push_back({parse_merge_id(a, n, number), parse_merge_id(b, n, number),
                      parse_cell(h, number)});
  }
  return Dendrogram(std::move(labels), std::move(merges));
}

std::vector<std::size_t> read_swap_script(std::istream& in) {
  std::vector<std::size_t> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    line = line.substr(0, line.find('#'));
    std::istringstream is(line);
    for (std::string tok; is >> tok;) {
      long long v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc{} || ptr != tok.data() + tok.size() || v < 1)
        throw ParseError(number, "invalid merge number '" + tok + "'");
      out.push_back(static_cast<std::size_t>(v - 1));
    }
  }
  return out;
}

}  // namespace wnet
