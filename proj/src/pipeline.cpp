#include "wnet/pipeline.hpp"

#include <fstream>
#include <map>

#include "wnet/cores.hpp"
#include "wnet/dissim.hpp"
#include "wnet/formats.hpp"
#include "wnet/hits.hpp"
#include "wnet/normalize.hpp"
#include "wnet/pajek_io.hpp"
#include "wnet/render.hpp"
#include "wnet/report.hpp"
#include "wnet/skeleton.hpp"
#include "wnet/transforms.hpp"

namespace wnet {

namespace fs = std::filesystem;

namespace {

std::ifstream open_input(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read " + path.string());
  return in;
}

struct NamedCluster {
  const char* name;
  std::vector<std::pair<const char*, const char*>> members;  // iso2, country name
};

const std::vector<NamedCluster>& five_clusters() {
  static const std::vector<NamedCluster> clusters = {
      {"Less",
       {{"GR", "Greece"}, {"PT", "Portugal"}, {"PL", "Poland"}, {"SK", "Slovakia"},
        {"CZ", "Czechia"}, {"HU", "Hungary"}, {"LV", "Latvia"}, {"LT", "Lithuania"},
        {"EE", "Estonia"}, {"rW", "Rest of the world"}, {"MT", "Malta"}}},
      {"Balkan",
       {{"SI", "Slovenia"}, {"HR", "Croatia"}, {"MK", "North Macedonia"}, {"RS", "Serbia"},
        {"BG", "Bulgaria"}, {"RO", "Romania"}, {"CY", "Cyprus"}, {"TR", "T\xC3\xBCrkiye"}}},
      {"LieLux", {{"LI", "Liechtenstein"}, {"LU", "Luxembourg"}}},
      {"High",
       {{"IS", "Iceland"}, {"DK", "Denmark"}, {"NO", "Norway"}, {"SE", "Sweden"},
        {"FI", "Finland"}, {"NL", "Netherlands"}, {"GB", "United Kingdom"}}},
      {"Center",
       {{"IE", "Ireland"}, {"BE", "Belgium"}, {"FR", "France"}, {"AT", "Austria"},
        {"DE", "Germany"}, {"IT", "Italy"}, {"ES", "Spain"}}},
  };
  return clusters;
}

void write_file(const fs::path& dir, const std::string& name, const std::string& content,
                std::vector<std::string>& written) {
  std::ofstream out(dir / name, std::ios::binary);
  if (!out) throw DataError("cannot write " + (dir / name).string());
  out << content;
  written.push_back(name);
}

std::vector<std::string> short_names(const Network& net) {
  std::vector<std::string> out;
  for (std::size_t v = 0; v < net.node_count(); ++v) out.push_back(net.short_name(v));
  return out;
}

}  // namespace

Network load_erasmus(const fs::path& dir, Warnings* warnings) {
  auto in = open_input(dir / kErasmusNet);
  Network net = read_net(in, warnings);
  if (fs::exists(dir / kErasmusNam)) {
    auto nam = open_input(dir / kErasmusNam);
    net = attach_iso2(net, read_nam(nam));
  }
  if (fs::exists(dir / kErasmusVec)) {
    auto vec = open_input(dir / kErasmusVec);
    net = attach_population(net, read_vec(vec));
  }
  return net;
}

Partition erasmus_five_clusters(const Network& net) {
  Partition p;
  p.cluster.assign(net.node_count(), 0);
  int id = 0;
  for (const auto& cluster : five_clusters()) {
    ++id;
    p.names.emplace_back(cluster.name);
    for (const auto& [iso, name] : cluster.members) {
      auto v = net.find(iso);
      if (!v) v = net.find(name);
      if (!v) throw DataError(std::string("country ") + iso + " not found in the network");
      p.cluster[*v] = id;
    }
  }
  for (std::size_t v = 0; v < net.node_count(); ++v)
    if (p.cluster[v] == 0)
      throw DataError("node " + net.short_name(v) + " is not covered by the five clusters");
  p.validate();
  return p;
}

Dendrogram salton_ward(const Network& net) {
  const auto transformed = power_transform(to_matrix(net), 0.1);
  return ward(row_dissimilarity(transformed, RowMethod::CorrectedSalton1m));
}

Dendrogram activity_ward(const Network& net, Warnings* warnings) {
  const auto act = activity(to_matrix(net), warnings);
  return ward(row_dissimilarity(act, RowMethod::CorrectedEuclid, MissingPolicy::Pairwise));
}

std::vector<std::string> repro_erasmus(const Network& net, const fs::path& out_dir,
                                       Warnings* warnings) {
  fs::create_directories(out_dir);
  std::vector<std::string> written;
  const auto names = short_names(net);

  write_file(out_dir, "info.txt", info_report(net), written);

  const auto h = hits(net);
  write_file(out_dir, "table1.txt", hits_table(net, h, TableFormat::Text), written);
  write_file(out_dir, "table1.csv", hits_table(net, h, TableFormat::Csv), written);

  for (std::size_t k : {1, 2}) {
    const auto skeleton = k_neighbors(net, k, Direction::Out);
    const std::string stem = "kneighbors" + std::to_string(k);
    write_file(out_dir, stem + ".net", write_net(skeleton), written);
    write_file(out_dir, stem + ".dot", skeleton_dot(skeleton), written);
  }

  const auto raw = to_matrix(net);
  const auto mask = pathfinder(sim_to_dissim(raw, DissimMethod::Ratio), PathfinderParams{});
  const auto pf = filter_arcs(net, mask);
  write_file(out_dir, "pathfinder.net", write_net(pf), written);
  write_file(out_dir, "pathfinder.dot", skeleton_dot(pf), written);

  const std::map<std::string, DegreeMode> modes = {
      {"all", DegreeMode::All}, {"in", DegreeMode::In}, {"out", DegreeMode::Out}};
  for (const auto& [name, mode] : modes) {
    const auto dec = ps_core_numbers(net, mode);
    write_file(out_dir, "pscores_" + name + ".txt", core_table(net, dec, TableFormat::Text),
               written);
    const auto tree = core_expansion_dendrogram(dec, names);
    DendrogramStyle style;
    style.level_max = dec.levels.empty() ? 0.0 : dec.levels.back();
    write_file(out_dir, "pscores_" + name + ".svg", dendrogram_svg(tree, style), written);
  }

  std::vector<std::size_t> alphabetical(net.node_count());
  for (std::size_t v = 0; v < alphabetical.size(); ++v) alphabetical[v] = v;
  write_file(out_dir, "matrix_raw.svg", matrix_svg(raw, alphabetical), written);

  const auto transformed = power_transform(raw, 0.1);
  const auto salton = row_dissimilarity(transformed, RowMethod::CorrectedSalton1m);
  const auto salton_tree = ward(salton);
  const auto salton_order = salton_tree.leaf_order();
  write_file(out_dir, "salton_dissim.csv", write_dissim(salton), written);
  write_file(out_dir, "salton_ward.dendro", write_dendrogram(salton_tree), written);
  write_file(out_dir, "salton_ward.svg", dendrogram_svg(salton_tree), written);
  write_file(out_dir, "salton_matrix.svg", matrix_svg(transformed, salton_order), written);
  write_file(out_dir, "salton_matrix_qbins.svg", matrix_svg(quantile_bins(raw), salton_order),
             written);

  const auto act = activity(raw, warnings);
  const auto act_tree =
      ward(row_dissimilarity(act, RowMethod::CorrectedEuclid, MissingPolicy::Pairwise));
  const auto partition = erasmus_five_clusters(net);
  MatrixStyle diverging;
  diverging.palette = Palette::Diverging;
  write_file(out_dir, "activity.csv", write_matrix(act), written);
  write_file(out_dir, "activity_ward.dendro", write_dendrogram(act_tree), written);
  write_file(out_dir, "activity_ward.svg", dendrogram_svg(act_tree), written);
  write_file(out_dir, "activity_matrix.svg",
             matrix_svg(act, act_tree.leaf_order(), diverging, partition), written);

  const auto bm = blockmodel(act, partition);
  write_file(out_dir, "blockmodel.txt", blockmodel_table(bm, partition.names, TableFormat::Text),
             written);
  write_file(out_dir, "blockmodel.clu", write_clu(partition.cluster), written);
  WeightMatrix blocks(static_cast<std::size_t>(bm.k), partition.names);
  for (int r = 0; r < bm.k; ++r)
    for (int c = 0; c < bm.k; ++c)
      if (!bm.empty(r, c)) blocks.set(r, c, bm.at(r, c));
  std::vector<std::size_t> block_order(static_cast<std::size_t>(bm.k));
  for (std::size_t i = 0; i < block_order.size(); ++i) block_order[i] = i;
  write_file(out_dir, "blockmodel.svg", matrix_svg(blocks, block_order, diverging), written);
  return written;
}

}  // namespace wnet
