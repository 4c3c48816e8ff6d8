// Acceptance runner: one PASS / FAIL / SKIP line per criterion.
//
//   acceptance [N ...]
//
// Criteria that need the Erasmus flow data read it from $WNET_ERASMUS_DIR or
// <source>/data/erasmus and report SKIP when ErasmusFlows.net is absent.
// Exit status: 0 all requested criteria passed, 1 any failed, 77 all skipped.
#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <Eigen/Dense>

#include "golden.hpp"
#include "oracles.hpp"
#include "support.hpp"
#include "wnet/cluster.hpp"
#include "wnet/cores.hpp"
#include "wnet/dissim.hpp"
#include "wnet/hits.hpp"
#include "wnet/normalize.hpp"
#include "wnet/pajek_io.hpp"
#include "wnet/pipeline.hpp"
#include "wnet/skeleton.hpp"
#include "wnet/transforms.hpp"

using namespace wnet;
namespace fs = std::filesystem;

namespace {

enum class Status { Pass, Fail, Skip };

struct Outcome {
  Status status;
  std::string detail;
};

Outcome pass(std::string d) { return {Status::Pass, std::move(d)}; }
Outcome fail(std::string d) { return {Status::Fail, std::move(d)}; }

std::string num(double v, int digits = 6) {
  std::ostringstream os;
  os.precision(digits);
  os << v;
  return os.str();
}

std::optional<fs::path> data_dir() {
  std::vector<fs::path> candidates;
  if (const char* env = std::getenv("WNET_ERASMUS_DIR")) candidates.emplace_back(env);
  candidates.emplace_back(fs::path(WNET_SOURCE_DIR) / "data" / "erasmus");
  for (const auto& c : candidates)
    if (fs::exists(c / kErasmusNet)) return c;
  return std::nullopt;
}

const Outcome kNoData{Status::Skip,
                      "ErasmusFlows.net not found (set WNET_ERASMUS_DIR or use data/erasmus)"};

Network erasmus() { return load_erasmus(*data_dir()); }

// Node of a Table 1 country by ISO2 code, else by name.
std::size_t node_of(const Network& net, const char* iso2) {
  if (auto v = net.find(iso2)) return *v;
  for (const auto& row : golden::kTable1)
    if (std::string(row.iso2) == iso2)
      if (auto v = net.find(row.name)) return *v;
  throw DataError(std::string("country ") + iso2 + " not in the network");
}

Outcome data_fidelity() {
  if (!data_dir()) return kNoData;
  const auto net = erasmus();
  std::vector<std::string> problems;
  if (net.node_count() != 35) problems.push_back("n=" + std::to_string(net.node_count()));
  const auto range = weight_range(net);
  if (range.min != 1.0) problems.push_back("w_min=" + num(range.min));
  if (range.max != 217003.0) problems.push_back("w_max=" + num(range.max));
  const double dens = density(net);
  if (std::abs(dens - 0.9984) > 0.001) problems.push_back("density=" + num(dens));
  std::set<std::pair<std::size_t, std::size_t>> missing;
  for (std::size_t u = 0; u < net.node_count(); ++u)
    for (std::size_t v = 0; v < net.node_count(); ++v)
      if (u != v && !net.weight(u, v)) missing.insert({u, v});
  const std::set<std::pair<std::size_t, std::size_t>> expected{
      {node_of(net, "CY"), node_of(net, "LI")}, {node_of(net, "MT"), node_of(net, "LI")}};
  if (missing != expected) problems.push_back(std::to_string(missing.size()) + " missing pairs");
  const std::string summary = "n=35 w_min=1 w_max=217003 density=" + num(dens, 5) +
                              " missing={CY->LI, MT->LI}";
  if (problems.empty()) return pass(summary);
  std::string d;
  for (const auto& p : problems) d += (d.empty() ? "" : ", ") + p;
  return fail(d);
}

Outcome table1() {
  if (!data_dir()) return kNoData;
  const auto net = erasmus();
  const auto r = hits(net);
  double worst_score = 0, worst_q = 0;
  std::vector<std::string> problems;
  for (const auto& row : golden::kTable1) {
    const auto v = node_of(net, row.iso2);
    if (r.out_degree[v] != row.wod || r.in_degree[v] != row.wid)
      problems.push_back(std::string(row.iso2) + " degrees");
    worst_score = std::max({worst_score, std::abs(r.hub[v] - row.hub), std::abs(r.authority[v] - row.aut)});
    if (!r.hubness[v] || !r.authorityness[v]) {
      problems.push_back(std::string(row.iso2) + " q undefined");
      continue;
    }
    worst_q = std::max({worst_q, std::abs(*r.hubness[v] - row.qh), std::abs(*r.authorityness[v] - row.qa)});
  }
  if (worst_score > 1e-4) problems.push_back("hub/aut error " + num(worst_score));
  if (worst_q > 5e-3) problems.push_back("qh/qa error " + num(worst_q));
  const std::string d = "max |hub/aut| error " + num(worst_score, 3) + ", max |qh/qa| error " +
                        num(worst_q, 3) + (r.converged ? "" : ", not converged");
  if (!problems.empty()) return fail(d + "; " + problems.front());
  return pass("35 rows, degrees exact, " + d);
}

Outcome ps_cores() {
  if (!data_dir()) return kNoData;
  const auto net = erasmus();
  const std::set<std::size_t> top4{node_of(net, "DE"), node_of(net, "FR"), node_of(net, "IT"),
                                   node_of(net, "ES")};
  std::vector<std::string> problems;
  const std::map<DegreeMode, std::pair<const char*, double>> expected{
      {DegreeMode::All, {"all", 609063}}, {DegreeMode::In, {"in", 287693}},
      {DegreeMode::Out, {"out", 364594}}};
  for (const auto& [mode, e] : expected) {
    const auto dec = ps_core_numbers(net, mode);
    const double top = dec.levels.back();
    const auto core = core_at(dec, top);
    if (top != e.second || std::set<std::size_t>(core.begin(), core.end()) != top4)
      problems.push_back(std::string(e.first) + " top core " + num(top, 7));
  }
  const auto all = ps_core_numbers(net, DegreeMode::All);
  for (const auto& [iso, level] : std::vector<std::pair<const char*, double>>{
           {"PL", 452314}, {"GB", 439822}, {"PT", 400014}}) {
    const auto v = node_of(net, iso);
    if (all.core_number[v] != level) problems.push_back(std::string(iso) + " " + num(all.core_number[v], 7));
  }
  // the nodes joining at those levels must be exactly these
  const auto tree = core_expansion_dendrogram(all, std::vector<std::string>(35, ""));
  const auto order = core_ranking(all);
  if (order.size() < 7 || order[4] != node_of(net, "PL") || order[5] != node_of(net, "GB") ||
      order[6] != node_of(net, "PT"))
    problems.push_back("expansion order differs");
  if (tree.merges()[3].height != 609063 - 452314) problems.push_back("PL height");
  if (!problems.empty()) return fail(problems.front());
  return pass("top {DE,FR,IT,ES} at 609063/287693/364594; PL 452314, GB 439822, PT 400014");
}

Outcome skeletons() {
  if (!data_dir()) return kNoData;
  const auto net = erasmus();
  const auto one = k_neighbors(net, 1, Direction::Out);
  std::vector<int> chosen(net.node_count(), 0);
  for (const auto& a : one.arcs()) ++chosen[a.target];
  const auto es = node_of(net, "ES");
  bool es_top = true;
  for (std::size_t v = 0; v < chosen.size(); ++v)
    if (v != es && chosen[v] >= chosen[es]) es_top = false;

  const auto two = k_neighbors(net, 2, Direction::Out);
  const std::set<std::size_t> big{node_of(net, "ES"), node_of(net, "DE"), node_of(net, "FR"),
                                  node_of(net, "IT")};
  std::vector<bool> picks_big(net.node_count(), false);
  for (const auto& a : two.arcs())
    if (big.count(a.target)) picks_big[a.source] = true;
  std::vector<std::string> outsiders;
  for (std::size_t v = 0; v < net.node_count(); ++v)
    if (!picks_big[v]) outsiders.push_back(net.short_name(v));
  const bool sk_only = outsiders == std::vector<std::string>{net.short_name(node_of(net, "SK"))};

  std::string d = "ES chosen by " + std::to_string(chosen[es]) + " in 1-neighbors; outside {ES,DE,FR,IT} in 2-neighbors:";
  for (const auto& o : outsiders) d += " " + o;
  return es_top && sk_only ? pass(d) : fail(d);
}

Outcome transforms() {
  WeightMatrix m(1);
  m.set(0, 0, 217003);
  const double p = power_transform(m, 0.1).value(0, 0);
  const double l = log_transform(m).value(0, 0);
  const std::string d = "217003^0.1 = " + num(p, 10) + ", ln 217003 = " + num(l, 10);
  return std::abs(p - 3.417013) <= 1e-6 && std::abs(l - 12.28767) <= 1e-5 ? pass(d) : fail(d);
}

// Each property suite returns the number of failed trials.
int salton_suite() {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> scale(0.01, 100.0);
  int failed = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 2 + trial % 7;
    auto grid = testing::random_grid(rng, n, 0.3);
    for (auto& row : grid) row[0] += 0.5;
    const auto m = testing::matrix_from_grid(grid);
    const std::size_t u = trial % n;
    const std::size_t v = (u + 1 + (trial / n) % (n - 1)) % n;
    const double s = corrected_salton_pair(m, u, v);
    const double a = scale(rng), b = scale(rng);
    WeightMatrix scaled = m, image = m;
    for (std::size_t t = 0; t < n; ++t) {
      scaled.set(u, t, a * m.value(u, t));
      scaled.set(v, t, b * m.value(v, t));
      if (t != u && t != v) image.set(v, t, a * m.value(u, t));
    }
    image.set(v, v, a * m.value(u, u));
    image.set(v, u, a * m.value(u, v));
    const bool ok = s >= -1.0 && s <= 1.0 &&                                   // 1
                    std::abs(s - corrected_salton_pair(m, v, u)) < 1e-12 &&    // 2
                    std::abs(corrected_salton_pair(m, u, u) - 1.0) < 1e-12 &&  // 3
                    s >= 0.0 &&                                                // 4
                    std::abs(corrected_salton_pair(scaled, u, v) - s) < 1e-9 &&  // 5
                    std::abs(corrected_salton_pair(image, v, u) - 1.0) < 1e-9;   // 6
    if (!ok) ++failed;
  }
  return failed;
}

int core_suite() {
  std::mt19937_64 rng(67);
  int failed = 0;
  for (int trial = 0; trial < 200; ++trial) {
    testing::RandomNetworkOptions opt;
    opt.loops = true;
    opt.integer_weights = trial % 2 == 0;
    opt.max_weight = trial % 2 == 0 ? 6 : 50;
    const std::size_t n = 1 + trial % 7;
    const auto net = testing::random_network(rng, n, opt);
    bool ok = true;
    for (auto mode : {DegreeMode::All, DegreeMode::In, DegreeMode::Out}) {
      const auto dec = ps_core_numbers(net, mode);
      const auto oracle = testing::brute_force_cores(net, mode);
      for (std::size_t v = 0; v < n; ++v)
        if (std::abs(dec.core_number[v] - oracle[v]) > 1e-9 * std::max(1.0, oracle[v])) ok = false;
      std::vector<std::size_t> previous;
      for (auto it = dec.levels.rbegin(); it != dec.levels.rend(); ++it) {
        const auto core = core_at(dec, *it);
        if (!std::includes(core.begin(), core.end(), previous.begin(), previous.end())) ok = false;
        previous = core;
      }
    }
    if (!ok) ++failed;
  }
  return failed;
}

int pathfinder_suite() {
  std::mt19937_64 rng(71);
  const double inf = std::numeric_limits<double>::infinity();
  int failed = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 3 + trial % 5;
    testing::RandomNetworkOptions opt;
    opt.arc_probability = 0.6;
    opt.integer_weights = trial % 3 == 0;
    opt.max_weight = trial % 3 == 0 ? 5 : 100;
    const auto d = sim_to_dissim(to_matrix(testing::random_network(rng, n, opt)), DissimMethod::Ratio);
    bool ok = true;
    for (double r : {1.0, 2.0, inf})
      for (std::size_t q : {std::size_t{2}, std::size_t{3}, n - 1})
        if (q <= n - 1 && pathfinder(d, {r, q}) != testing::brute_force_pathfinder(d, r, q)) ok = false;
    if (!ok) ++failed;
  }
  return failed;
}

int ward_suite() {
  std::mt19937_64 rng(73);
  std::uniform_real_distribution<double> value(0.1, 10.0);
  int failed = 0;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::string> labels;
    for (int i = 0; i < 8; ++i) labels.push_back(std::to_string(i));
    DissimMatrix d(8, labels, "random");
    for (std::size_t u = 0; u < 8; ++u)
      for (std::size_t v = u + 1; v < 8; ++v) d.set(u, v, value(rng));
    const auto tree = ward(d);
    const auto oracle = testing::naive_ward(d);
    bool ok = true;
    for (std::size_t i = 0; i < oracle.size(); ++i) {
      const auto leaves = tree.leaves_under(i);
      if (std::set<std::size_t>(leaves.begin(), leaves.end()) != oracle[i].members) ok = false;
      if (std::abs(tree.merges()[i].height - oracle[i].height) > 1e-9 * oracle[i].height) ok = false;
    }
    if (!ok) ++failed;
  }
  return failed;
}

int hits_suite() {
  std::mt19937_64 rng(79);
  int failed = 0;
  for (int trial = 0; trial < 50; ++trial) {
    testing::RandomNetworkOptions opt;
    opt.arc_probability = 0.8;
    opt.loops = true;
    const auto net = testing::random_network(rng, 6, opt);
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(6, 6);
    for (const auto& a : net.arcs()) w(a.source, a.target) = a.weight;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> sx(w.transpose() * w), sy(w * w.transpose());
    Eigen::VectorXd x = sx.eigenvectors().col(5), y = sy.eigenvectors().col(5);
    if (x.sum() < 0) x = -x;
    if (y.sum() < 0) y = -y;
    const auto r = hits(net);
    bool ok = r.converged;
    for (int v = 0; v < 6; ++v)
      if (std::abs(r.authority[v] - x(v)) > 1e-8 || std::abs(r.hub[v] - y(v)) > 1e-8) ok = false;
    if (!ok) ++failed;
  }
  return failed;
}

int kneighbor_suite() {
  std::mt19937_64 rng(83);
  int failed = 0;
  for (int trial = 0; trial < 100; ++trial) {
    testing::RandomNetworkOptions opt;
    opt.integer_weights = true;
    opt.max_weight = 20;
    opt.arc_probability = 0.7;
    const auto net = testing::random_network(rng, 8, opt);
    const auto powered = from_matrix(power_transform(to_matrix(net), 0.1));
    bool ok = true;
    for (std::size_t k : {1, 2, 3}) {
      const auto a = k_neighbors(net, k, Direction::Out), b = k_neighbors(powered, k, Direction::Out);
      if (a.arc_count() != b.arc_count()) ok = false;
      for (std::size_t i = 0; ok && i < a.arc_count(); ++i)
        if (a.arcs()[i].source != b.arcs()[i].source || a.arcs()[i].target != b.arcs()[i].target)
          ok = false;
    }
    if (!ok) ++failed;
  }
  return failed;
}

Outcome properties() {
  const std::vector<std::pair<const char*, int>> suites{
      {"salton 1000", salton_suite()},   {"cores 200", core_suite()},
      {"pathfinder 200", pathfinder_suite()}, {"ward 50", ward_suite()},
      {"hits 50", hits_suite()},         {"kneighbors 100", kneighbor_suite()}};
  std::string d;
  bool ok = true;
  for (const auto& [name, failed] : suites) {
    d += (d.empty() ? "" : ", ") + std::string(name) + (failed ? " FAILED " + std::to_string(failed) : " ok");
    if (failed) ok = false;
  }
  return ok ? pass(d) : fail(d);
}

Outcome structure() {
  if (!data_dir()) return kNoData;
  const auto net = erasmus();
  const auto tree = salton_ward(net);
  const std::set<std::size_t> c1{node_of(net, "IT"), node_of(net, "ES"), node_of(net, "FR"),
                                 node_of(net, "DE")};
  bool subtree = false;
  for (std::size_t i = 0; i < tree.merges().size(); ++i) {
    const auto leaves = tree.leaves_under(i);
    if (std::set<std::size_t>(leaves.begin(), leaves.end()) == c1) subtree = true;
  }
  const auto act = activity(to_matrix(net));
  const auto partition = erasmus_five_clusters(net);
  const auto bm = blockmodel(act, partition);
  const int lielux = 2, high = 3;  // Less, Balkan, LieLux, High, Center
  const double diag = bm.at(lielux, lielux), lh = bm.at(lielux, high), hl = bm.at(high, lielux);
  const std::string d = std::string("C1 subtree ") + (subtree ? "found" : "missing") +
                        "; LieLux diagonal " + num(diag, 4) + ", LieLux x High " + num(lh, 4) +
                        ", High x LieLux " + num(hl, 4);
  return subtree && diag > 0 && lh < 0 && hl < 0 ? pass(d) : fail(d);
}

// 35-node network with the Erasmus country codes and seeded weights, used when
// the real data is unavailable.
Network stand_in() {
  std::vector<NodeRecord> nodes;
  for (const auto& row : golden::kTable1) {
    NodeRecord r;
    r.label = row.name;
    r.iso2 = row.iso2;
    r.original_index = nodes.size();
    nodes.push_back(r);
  }
  std::mt19937_64 rng(20241016);
  std::uniform_int_distribution<int> w(1, 217003);
  std::vector<Arc> arcs;
  for (std::size_t u = 0; u < 35; ++u)
    for (std::size_t v = 0; v < 35; ++v)
      if (u != v) arcs.push_back({u, v, static_cast<double>(w(rng))});
  return Network(nodes, arcs);
}

std::map<std::string, std::string> read_tree(const fs::path& dir) {
  std::map<std::string, std::string> files;
  for (const auto& entry : fs::recursive_directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    std::ifstream in(entry.path(), std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    files[fs::relative(entry.path(), dir).string()] = os.str();
  }
  return files;
}

Outcome determinism() {
  const bool real = data_dir().has_value();
  auto load = [real] { return real ? erasmus() : stand_in(); };
  const auto base = fs::temp_directory_path() / ("wnet_acceptance_" + std::to_string(::getpid()));
  fs::remove_all(base);
  repro_erasmus(load(), base / "a");
  repro_erasmus(load(), base / "b");
  const auto a = read_tree(base / "a"), b = read_tree(base / "b");
  fs::remove_all(base);
  const std::string what = real ? "Erasmus data" : "synthetic 35-country stand-in (Erasmus data absent)";
  if (a.empty() || a != b) return fail("outputs differ on " + what);
  return pass(std::to_string(a.size()) + " files byte-identical across two runs on " + what);
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<const char*, Outcome (*)()>> criteria{
      {"data fidelity", data_fidelity}, {"Table 1 reproduction", table1},
      {"Ps-cores golden", ps_cores},    {"skeleton claims", skeletons},
      {"transform spot values", transforms}, {"property suites", properties},
      {"qualitative structure", structure},  {"determinism", determinism}};
  std::vector<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.push_back(std::atoi(argv[i]));
  if (wanted.empty())
    for (int i = 1; i <= static_cast<int>(criteria.size()); ++i) wanted.push_back(i);

  int passed = 0, failed = 0, skipped = 0;
  for (int id : wanted) {
    if (id < 1 || id > static_cast<int>(criteria.size())) {
      std::cerr << "unknown criterion " << id << "\n";
      return 2;
    }
    const auto& [name, run] = criteria[id - 1];
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = fail(std::string("error: ") + e.what());
    }
    const char* tag = o.status == Status::Pass ? "PASS" : o.status == Status::Fail ? "FAIL" : "SKIP";
    std::cout << "criterion " << id << " (" << name << "): " << tag << " : " << o.detail << "\n";
    (o.status == Status::Pass ? passed : o.status == Status::Fail ? failed : skipped)++;
  }
  if (failed) return 1;
  if (skipped && !passed) return 77;
  return 0;
}
