#include "wnet/cli.hpp"

#include <unistd.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>

#include "wnet/cluster.hpp"
#include "wnet/cores.hpp"
#include "wnet/dissim.hpp"
#include "wnet/formats.hpp"
#include "wnet/hits.hpp"
#include "wnet/normalize.hpp"
#include "wnet/pajek_io.hpp"
#include "wnet/pipeline.hpp"
#include "wnet/render.hpp"
#include "wnet/report.hpp"
#include "wnet/skeleton.hpp"
#include "wnet/transforms.hpp"

namespace wnet {

namespace {

enum class InputKind { Network, Matrix, Dendrogram };

struct Input {
  InputKind kind;
  std::string text;
};

std::string slurp(const std::string& path, std::istream& stdin_stream) {
  std::ostringstream os;
  if (path.empty() || path == "-") {
    os << stdin_stream.rdbuf();
  } else {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw DataError("cannot read " + path);
    os << f.rdbuf();
  }
  return os.str();
}

InputKind sniff(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    auto start = line.find_first_not_of(" \t\r\xEF\xBB\xBF");
    if (start == std::string::npos) continue;
    line = line.substr(start);
    if (line.starts_with(kMatrixHeader)) return InputKind::Matrix;
    if (line.starts_with(kDendrogramHeader)) return InputKind::Dendrogram;
    if (line.front() == '%') continue;
    std::string head = line.substr(0, 9);
    std::transform(head.begin(), head.end(), head.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (head == "*vertices") return InputKind::Network;
    break;
  }
  throw DataError("unrecognized input: expected a Pajek network, a wnet matrix or a dendrogram");
}

Input load(const std::string& path, std::istream& stdin_stream) {
  Input input;
  input.text = slurp(path, stdin_stream);
  input.kind = sniff(input.text);
  return input;
}

struct NetworkOptions {
  std::string nam;
  std::string vec;
};

void add_network_options(CLI::App* cmd, NetworkOptions& opts) {
  cmd->add_option("--nam", opts.nam, "ISO2 names file (.nam) attached to the nodes");
  cmd->add_option("--vec", opts.vec, "population vector (.vec) attached to the nodes");
}

Network as_network(const Input& input, const NetworkOptions& opts, std::istream& stdin_stream,
                   Warnings& warnings) {
  Network net;
  std::istringstream is(input.text);
  if (input.kind == InputKind::Network) {
    net = read_net(is, &warnings);
  } else if (input.kind == InputKind::Matrix) {
    net = from_matrix(read_matrix(is));
  } else {
    throw DataError("expected a network, got a dendrogram");
  }
  if (!opts.nam.empty()) {
    std::istringstream nam(slurp(opts.nam, stdin_stream));
    net = attach_iso2(net, read_nam(nam));
  }
  if (!opts.vec.empty()) {
    std::istringstream vec(slurp(opts.vec, stdin_stream));
    net = attach_population(net, read_vec(vec));
  }
  return net;
}

WeightMatrix as_matrix(const Input& input, const NetworkOptions& opts, std::istream& stdin_stream,
                       Warnings& warnings) {
  if (input.kind == InputKind::Matrix && opts.nam.empty()) {
    std::istringstream is(input.text);
    return read_matrix(is);
  }
  return to_matrix(as_network(input, opts, stdin_stream, warnings));
}

Dendrogram as_dendrogram(const Input& input) {
  if (input.kind != InputKind::Dendrogram) throw DataError("expected a dendrogram input");
  std::istringstream is(input.text);
  return read_dendrogram(is);
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty() || out_path == "-") {
    out << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw DataError("cannot write " + out_path);
  f << text;
}

bool use_color(std::ostream& out) {
  return &out == &std::cout && std::getenv("WNET_NO_COLOR") == nullptr && isatty(1) != 0;
}

double parse_number(const std::string& s, const std::string& flag) {
  std::size_t used = 0;
  double r = 0.0;
  try {
    r = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw CLI::ValidationError(flag, "expected a number");
  return r;
}

double parse_r(const std::string& s) {
  if (s == "inf" || s == "Inf" || s == "infinity") return std::numeric_limits<double>::infinity();
  const double r = parse_number(s, "--r");
  if (r < 1.0) throw CLI::ValidationError("--r", "must be >= 1 or 'inf'");
  return r;
}

std::vector<std::size_t> load_swaps(const std::string& path, std::istream& stdin_stream) {
  if (path.empty()) return {};
  std::istringstream is(slurp(path, stdin_stream));
  return read_swap_script(is);
}

// Order of nodes from a dendrogram, or from a 1-based permutation file.
std::vector<std::size_t> load_order(const std::string& path, std::size_t n,
                                    const std::vector<std::size_t>& swaps,
                                    std::istream& stdin_stream) {
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  if (path.empty()) return order;
  const Input input = load(path, stdin_stream);
  return apply_swaps(as_dendrogram(input), swaps).leaf_order();
}

std::string write_permutation(const std::vector<std::size_t>& order) {
  std::string out = "*Vertices " + std::to_string(order.size()) + "\n";
  for (std::size_t v : order) out += std::to_string(v + 1) + "\n";
  return out;
}

const std::map<std::string, DegreeMode> kModes = {
    {"all", DegreeMode::All}, {"in", DegreeMode::In}, {"out", DegreeMode::Out}};
const std::map<std::string, TableFormat> kFormats = {{"text", TableFormat::Text},
                                                     {"csv", TableFormat::Csv}};
const std::map<std::string, Palette> kPalettes = {{"grey", Palette::Grey},
                                                  {"diverging", Palette::Diverging}};
const std::map<std::string, MissingPolicy> kMissing = {{"zero", MissingPolicy::Zero},
                                                       {"pairwise", MissingPolicy::Pairwise}};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exploratory analysis of weighted directed networks", "wnet"};
  app.require_subcommand(1);

  std::string input_path, out_path;
  NetworkOptions net_opts;
  auto add_io = [&](CLI::App* cmd, const char* what) {
    cmd->add_option("input", input_path, what);
    cmd->add_option("-o,--out", out_path, "output file (default: standard output)");
  };

  auto* info = app.add_subcommand("info", "basic network statistics");
  add_io(info, "Pajek network or wnet matrix");
  add_network_options(info, net_opts);

  auto* ingest = app.add_subcommand("ingest", "convert a flow CSV into a Pajek network");
  add_io(ingest, "CSV file with sending, receiving and count columns");
  std::string col_src = "0", col_dst = "1", col_cnt = "2", delimiter;
  ingest->add_option("--source", col_src, "sending column (name or 0-based index)");
  ingest->add_option("--target", col_dst, "receiving column (name or 0-based index)");
  ingest->add_option("--count", col_cnt, "count column (name or 0-based index)");
  ingest->add_option("--delimiter", delimiter, "force the delimiter (',' ';' or 'tab')");

  auto* transform = app.add_subcommand("transform", "monotone weight transformation");
  add_io(transform, "Pajek network or wnet matrix");
  add_network_options(transform, net_opts);
  double power = 0.0;
  bool use_log = false, use_qbins = false;
  auto* power_opt = transform->add_option("--power", power, "w -> w^P");
  auto* log_opt = transform->add_flag("--log", use_log, "w -> ln w");
  auto* qbins_opt = transform->add_flag("--qbins", use_qbins, "19-quantile bins 1..10");
  power_opt->excludes(log_opt)->excludes(qbins_opt);
  log_opt->excludes(qbins_opt);

  auto* hits_cmd = app.add_subcommand("hits", "weighted hubs and authorities");
  add_io(hits_cmd, "Pajek network");
  add_network_options(hits_cmd, net_opts);
  std::string format = "text";
  HitsOptions hits_opts;
  hits_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "csv"}));
  hits_cmd->add_option("--tol", hits_opts.tolerance, "convergence tolerance");
  hits_cmd->add_option("--max-iter", hits_opts.max_iterations, "iteration limit");

  auto* kneigh = app.add_subcommand("kneigh", "closest k-neighbors skeleton");
  add_io(kneigh, "Pajek network");
  add_network_options(kneigh, net_opts);
  std::size_t k = 1;
  std::string dir = "out", skeleton_format = "net";
  kneigh->add_option("--k", k, "neighbors kept per node")->check(CLI::PositiveNumber);
  kneigh->add_option("--dir", dir)->check(CLI::IsMember({"out", "in"}));
  kneigh->add_option("--format", skeleton_format)->check(CLI::IsMember({"net", "dot"}));

  auto* pf = app.add_subcommand("pathfinder", "Pathfinder skeleton");
  add_io(pf, "Pajek network (similarity weights)");
  add_network_options(pf, net_opts);
  std::string r_text = "inf", dissim_kind = "ratio";
  std::size_t q = 0;
  pf->add_option("--r", r_text, "Minkowski exponent >= 1 or 'inf'");
  pf->add_option("--q", q, "maximum path length (default n-1)");
  pf->add_option("--dissim", dissim_kind)->check(CLI::IsMember({"ratio", "subtract"}));
  pf->add_option("--format", skeleton_format)->check(CLI::IsMember({"net", "dot"}));

  auto* pscores = app.add_subcommand("pscores", "generalized Ps-cores");
  add_io(pscores, "Pajek network");
  add_network_options(pscores, net_opts);
  std::string mode = "all", svg_path;
  std::size_t top = 0;
  pscores->add_option("--mode", mode)->check(CLI::IsMember({"all", "in", "out"}));
  pscores->add_option("--top", top, "print the TOP highest levels as 'level: names'");
  pscores->add_option("--format", format)->check(CLI::IsMember({"text", "csv"}));
  pscores->add_option("--svg", svg_path, "write the core expansion dendrogram as SVG");

  auto* dissim = app.add_subcommand("dissim", "dissimilarity matrix between nodes");
  add_io(dissim, "Pajek network or wnet matrix");
  add_network_options(dissim, net_opts);
  std::string method = "corrected_salton_1m", missing = "zero";
  double dissim_power = 0.0;
  dissim->add_option("--method", method)
      ->check(CLI::IsMember({"euclid", "corrected_euclid", "salton_1m", "salton_acos",
                             "corrected_salton_1m", "corrected_salton_acos", "D1", "D2"}));
  std::string dissim_transform;
  auto* dpow = dissim->add_option("--power", dissim_power, "apply w^P before comparing rows");
  dissim->add_option("--transform", dissim_transform, "power:P, log or qbins before comparing rows")
      ->excludes(dpow);
  dissim->add_option("--missing", missing)->check(CLI::IsMember({"zero", "pairwise"}));

  auto* balassa_cmd = app.add_subcommand("balassa", "Balassa index / activity normalization");
  add_io(balassa_cmd, "Pajek network or wnet matrix");
  add_network_options(balassa_cmd, net_opts);
  bool log2 = false;
  balassa_cmd->add_flag("--log2", log2, "activity: log2 of the Balassa index");

  auto* cluster_cmd = app.add_subcommand("cluster", "Ward clustering of a dissimilarity matrix");
  cluster_cmd->add_option("input,--dissim", input_path, "wnet dissimilarity matrix");
  cluster_cmd->add_option("-o,--out", out_path, "output file (default: standard output)");
  std::string cluster_method = "ward", swaps_path, clu_path, perm_path;
  std::size_t cut_k = 0;
  cluster_cmd->add_option("--method", cluster_method)->check(CLI::IsMember({"ward"}));
  cluster_cmd->add_option("--swaps", swaps_path, "swap script: 1-based merge numbers");
  cluster_cmd->add_option("--cut", cut_k, "number of clusters for --clu");
  cluster_cmd->add_option("--clu", clu_path, "write the --cut partition (.clu)");
  cluster_cmd->add_option("--perm", perm_path, "write the leaf order (1-based, .per)");
  cluster_cmd->add_option("--svg", svg_path, "write the dendrogram as SVG");

  auto* block_cmd = app.add_subcommand("blockmodel", "block means of a matrix under a partition");
  add_io(block_cmd, "Pajek network or wnet matrix");
  add_network_options(block_cmd, net_opts);
  std::string partition_path, names_csv;
  block_cmd->add_option("--partition", partition_path, "partition (.clu)")->required();
  block_cmd->add_option("--names", names_csv, "comma-separated cluster names");
  block_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "csv"}));

  auto* matrix_cmd = app.add_subcommand("matrix", "SVG heatmap of a matrix");
  add_io(matrix_cmd, "Pajek network, wnet matrix, or a dendrogram (with --values)");
  add_network_options(matrix_cmd, net_opts);
  std::string order_path, values_path, palette = "grey";
  matrix_cmd->add_option("--order", order_path, "dendrogram giving the row/column order");
  matrix_cmd->add_option("--values", values_path, "matrix to draw when the input is a dendrogram");
  matrix_cmd->add_option("--swaps", swaps_path, "swap script applied to the order dendrogram");
  matrix_cmd->add_option("--palette", palette)->check(CLI::IsMember({"grey", "diverging"}));
  matrix_cmd->add_option("--partition", partition_path, "partition (.clu) drawn as block lines");

  auto* dendro = app.add_subcommand("dendro", "SVG drawing of a dendrogram");
  add_io(dendro, "dendrogram file");
  double level_max = std::numeric_limits<double>::quiet_NaN();
  dendro->add_option("--swaps", swaps_path, "swap script: 1-based merge numbers");
  dendro->add_option("--level-max", level_max, "label the axis as LEVEL_MAX - height");

  auto* dot = app.add_subcommand("dot", "Graphviz DOT export");
  add_io(dot, "Pajek network");
  add_network_options(dot, net_opts);
  double pen_power = 0.1;
  dot->add_option("--power", pen_power, "pen width follows w^P");

  auto* repro = app.add_subcommand("repro", "run a complete published analysis");
  std::string dataset, data_dir = ".", out_dir = "repro-out";
  repro->add_option("dataset", dataset, "analysis name")
      ->required()
      ->check(CLI::IsMember({"erasmus"}));
  repro->add_option("--data", data_dir, "directory with ErasmusFlows.net (+ .nam, .vec)");
  repro->add_option("-o,--out", out_dir, "output directory");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  Warnings warnings;
  int status = 0;
  try {
    auto need_input = [&] { return load(input_path, in); };

    if (*info) {
      emit(info_report(as_network(need_input(), net_opts, in, warnings)), out_path, out);
    } else if (*ingest) {
      auto column = [](const std::string& s) -> ColumnRef {
        if (!s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
          return static_cast<std::size_t>(std::stoul(s));
        return s;
      };
      CsvColumns cols{column(col_src), column(col_dst), column(col_cnt), std::nullopt};
      if (delimiter == "tab" || delimiter == "\\t") cols.delimiter = '\t';
      else if (delimiter.size() == 1) cols.delimiter = delimiter[0];
      else if (!delimiter.empty()) throw CLI::ValidationError("--delimiter", "expected one character or 'tab'");
      std::istringstream csv(slurp(input_path, in));
      emit(write_net(ingest_csv(csv, cols, &warnings)), out_path, out);
    } else if (*transform) {
      const auto m = as_matrix(need_input(), net_opts, in, warnings);
      WeightMatrix result;
      if (*power_opt) result = power_transform(m, power);
      else if (use_log) result = log_transform(m);
      else if (use_qbins) result = quantile_bins(m);
      else throw CLI::ValidationError("transform", "one of --power, --log, --qbins is required");
      emit(write_matrix(result), out_path, out);
    } else if (*hits_cmd) {
      const auto net = as_network(need_input(), net_opts, in, warnings);
      const auto res = hits(net, hits_opts);
      if (!res.converged)
        warnings.push_back("hubs and authorities did not converge in " +
                           std::to_string(res.iterations) + " iterations");
      emit(hits_table(net, res, kFormats.at(format), use_color(out) && out_path.empty()), out_path,
           out);
    } else if (*kneigh) {
      const auto net = as_network(need_input(), net_opts, in, warnings);
      const auto skeleton = k_neighbors(net, k, dir == "out" ? Direction::Out : Direction::In);
      emit(skeleton_format == "dot" ? skeleton_dot(skeleton) : write_net(skeleton), out_path, out);
    } else if (*pf) {
      const auto net = as_network(need_input(), net_opts, in, warnings);
      const PathfinderParams params{parse_r(r_text), q};
      const auto d = sim_to_dissim(to_matrix(net), dissim_kind == "ratio" ? DissimMethod::Ratio
                                                                          : DissimMethod::Subtract);
      const auto skeleton = filter_arcs(net, pathfinder(d, params));
      emit(skeleton_format == "dot" ? skeleton_dot(skeleton) : write_net(skeleton), out_path, out);
    } else if (*pscores) {
      const auto net = as_network(need_input(), net_opts, in, warnings);
      const auto dec = ps_core_numbers(net, kModes.at(mode));
      emit(top > 0 ? core_levels(net, dec, top) : core_table(net, dec, kFormats.at(format)),
           out_path, out);
      if (!svg_path.empty()) {
        std::vector<std::string> labels;
        for (std::size_t v = 0; v < net.node_count(); ++v) labels.push_back(net.short_name(v));
        DendrogramStyle style;
        style.level_max = dec.levels.empty() ? 0.0 : dec.levels.back();
        emit(dendrogram_svg(core_expansion_dendrogram(dec, labels), style), svg_path, out);
      }
    } else if (*dissim) {
      auto m = as_matrix(need_input(), net_opts, in, warnings);
      if (dissim_power > 0.0) m = power_transform(m, dissim_power);
      if (dissim_transform == "log") m = log_transform(m);
      else if (dissim_transform == "qbins") m = quantile_bins(m);
      else if (dissim_transform.starts_with("power:")) m = power_transform(m, parse_number(dissim_transform.substr(6), "--transform"));
      else if (!dissim_transform.empty())
        throw CLI::ValidationError("--transform", "expected power:P, log or qbins");
      const std::map<std::string, RowMethod> rows = {
          {"euclid", RowMethod::Euclid},
          {"corrected_euclid", RowMethod::CorrectedEuclid},
          {"salton_1m", RowMethod::Salton1m},
          {"salton_acos", RowMethod::SaltonAcos},
          {"corrected_salton_1m", RowMethod::CorrectedSalton1m},
          {"corrected_salton_acos", RowMethod::CorrectedSaltonAcos}};
      DissimMatrix d = method == "D1"   ? link_dissimilarity(m, LinkMethod::D1)
                       : method == "D2" ? link_dissimilarity(m, LinkMethod::D2)
                                        : row_dissimilarity(m, rows.at(method), kMissing.at(missing));
      emit(write_dissim(d), out_path, out);
    } else if (*balassa_cmd) {
      const auto m = as_matrix(need_input(), net_opts, in, warnings);
      emit(write_matrix(log2 ? activity(m, &warnings) : balassa(m)), out_path, out);
    } else if (*cluster_cmd) {
      const Input input = need_input();
      if (input.kind != InputKind::Matrix) throw DataError("cluster expects a dissimilarity matrix");
      std::istringstream is(input.text);
      const auto tree = apply_swaps(ward(read_dissim(is)), load_swaps(swaps_path, in));
      emit(write_dendrogram(tree), out_path, out);
      if (!svg_path.empty()) emit(dendrogram_svg(tree), svg_path, out);
      if (!perm_path.empty()) emit(write_permutation(tree.leaf_order()), perm_path, out);
      if (!clu_path.empty()) {
        if (cut_k == 0) throw CLI::ValidationError("--clu", "requires --cut K");
        emit(write_clu(cut(tree, cut_k).cluster), clu_path, out);
      } else if (cut_k > 0) {
        cut(tree, cut_k);  // range check
      }
    } else if (*block_cmd) {
      const auto m = as_matrix(need_input(), net_opts, in, warnings);
      std::istringstream clu(slurp(partition_path, in));
      Partition p{read_clu(clu), {}};
      if (!names_csv.empty()) p.names = split_csv_record(names_csv, ',');
      emit(blockmodel_table(blockmodel(m, p), p.names, kFormats.at(format)), out_path, out);
    } else if (*matrix_cmd) {
      const Input input = need_input();
      WeightMatrix m;
      std::string order_source = order_path;
      if (input.kind == InputKind::Dendrogram) {
        if (values_path.empty()) throw DataError("a dendrogram input needs --values MATRIX");
        m = as_matrix(load(values_path, in), net_opts, in, warnings);
        const auto tree = apply_swaps(as_dendrogram(input), load_swaps(swaps_path, in));
        if (tree.leaf_count() != m.size()) throw DataError("dendrogram and matrix sizes differ");
        MatrixStyle style;
        style.palette = kPalettes.at(palette);
        std::optional<Partition> p;
        if (!partition_path.empty()) {
          std::istringstream clu(slurp(partition_path, in));
          p = Partition{read_clu(clu), {}};
        }
        emit(matrix_svg(m, tree.leaf_order(), style, p), out_path, out);
      } else {
        m = as_matrix(input, net_opts, in, warnings);
        const auto order = load_order(order_source, m.size(), load_swaps(swaps_path, in), in);
        MatrixStyle style;
        style.palette = kPalettes.at(palette);
        std::optional<Partition> p;
        if (!partition_path.empty()) {
          std::istringstream clu(slurp(partition_path, in));
          p = Partition{read_clu(clu), {}};
        }
        emit(matrix_svg(m, order, style, p), out_path, out);
      }
    } else if (*dendro) {
      const auto tree = apply_swaps(as_dendrogram(need_input()), load_swaps(swaps_path, in));
      DendrogramStyle style;
      if (!std::isnan(level_max)) style.level_max = level_max;
      emit(dendrogram_svg(tree, style), out_path, out);
    } else if (*dot) {
      const auto net = as_network(need_input(), net_opts, in, warnings);
      DotStyle style;
      style.power = pen_power;
      emit(skeleton_dot(net, style), out_path, out);
    } else if (*repro) {
      const auto net = load_erasmus(data_dir, &warnings);
      const auto files = repro_erasmus(net, out_dir, &warnings);
      out << "wrote " << files.size() << " files to " << out_dir << "\n";
    }
  } catch (const CLI::ValidationError& e) {
    err << "wnet: " << e.what() << "\n";
    status = 2;
  } catch (const std::exception& e) {
    err << "wnet: " << e.what() << "\n";
    status = 1;
  }
  for (const auto& w : warnings) err << "warning: " << w << "\n";
  return status;
}

}  // namespace wnet
