// Readers and writers for Pajek companion files (.net, .vec, .clu, .nam) and
// an ingester for delimiter-separated flow tables.
#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "wnet/model.hpp"

namespace wnet {

/// Malformed input. The message carries the offending line number.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

/// Reads a `*Vertices` / `*Arcs` / `*Edges` network. Duplicate arcs are summed,
/// edges become two reciprocal arcs and a missing weight defaults to 1; each of
/// these is reported through `warnings`.
Network read_net(std::istream& in, Warnings* warnings = nullptr);

/// Canonical Pajek text: quoted labels, LF line ends, weights in shortest
/// round-trip fixed notation.
std::string write_net(const Network& net);

std::vector<double> read_vec(std::istream& in);
std::string write_vec(const std::vector<double>& values);

/// Cluster ids are 1-based in the file and in the returned vector.
std::vector<int> read_clu(std::istream& in);
std::string write_clu(const std::vector<int>& clusters);

std::vector<std::string> read_nam(std::istream& in);

/// Attaches iso2 codes (one per node) to a network.
Network attach_iso2(const Network& net, const std::vector<std::string>& codes);
/// Attaches population counts (one per node) to a network.
Network attach_population(const Network& net, const std::vector<double>& values);

/// Selects a CSV column by header name or 0-based index.
using ColumnRef = std::variant<std::size_t, std::string>;

struct CsvColumns {
  ColumnRef source = std::size_t{0};
  ColumnRef target = std::size_t{1};
  ColumnRef count = std::size_t{2};
  /// Forces the delimiter; otherwise picked among ',', ';' and '\t'.
  std::optional<char> delimiter;
};

/// Builds a network from (sending, receiving, count) rows. Nodes are sorted
/// alphabetically by label; repeated pairs are summed.
Network ingest_csv(std::istream& in, const CsvColumns& columns = {}, Warnings* warnings = nullptr);

/// Splits one delimited record honoring RFC 4180 double quotes.
std::vector<std::string> split_csv_record(const std::string& line, char delimiter);

/// Formats a double in fixed notation with the fewest digits that round-trip.
std::string format_number(double value);

}  // namespace wnet
