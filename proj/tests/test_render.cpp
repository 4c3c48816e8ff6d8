#include <doctest.h>

#include <regex>
#include <string>

#include "support.hpp"
#include "wnet/cluster.hpp"
#include "wnet/render.hpp"

using namespace wnet;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t hits = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1))
    ++hits;
  return hits;
}

std::vector<std::string> fills(const std::string& svg, const std::string& cls) {
  std::vector<std::string> out;
  const std::regex re("<rect class=\"" + cls + "\"[^>]*fill=\"(#[0-9a-f]{6})\"");
  for (std::sregex_iterator it(svg.begin(), svg.end(), re), end; it != end; ++it)
    out.push_back((*it)[1]);
  return out;
}

}  // namespace

TEST_CASE("grey palette endpoints and one yellow cell") {
  WeightMatrix m(2);
  m.set(0, 0, 0.0);
  m.set(1, 0, 5.0);
  m.set(1, 1, 10.0);
  const auto svg = matrix_svg(m, {0, 1});
  CHECK(count(svg, "class=\"missing\"") == 1);
  CHECK(count(svg, kMissingColor) == 1);
  CHECK(fills(svg, "cell") == std::vector<std::string>{"#ffffff", "#808080", "#000000"});
}

TEST_CASE("every cell is drawn once") {
  std::mt19937_64 rng(2);
  auto m = testing::matrix_from_grid(testing::random_grid(rng, 7));
  m.clear(2, 3);
  const auto svg = matrix_svg(m, {6, 5, 4, 3, 2, 1, 0});
  CHECK(fills(svg, "cell").size() + fills(svg, "missing").size() == 49);
}

TEST_CASE("diverging palette follows the sign") {
  const auto m = testing::matrix_from_grid({{-2, 0}, {0.001, 4}});
  MatrixStyle style;
  style.palette = Palette::Diverging;
  const auto f = fills(matrix_svg(m, {0, 1}, style), "cell");
  REQUIRE(f.size() == 4);
  CHECK(f[0] == "#8080ff");  // half of the limit 4, blue
  CHECK(f[1] == "#ffffff");
  CHECK(f[2] == "#fffefe");  // tiny positive stays visibly red
  CHECK(f[3] == "#ff0000");
}

TEST_CASE("bad permutations are rejected") {
  WeightMatrix m(2);
  CHECK_THROWS_AS(matrix_svg(m, {0, 0}), DataError);
  CHECK_THROWS_AS(matrix_svg(m, {0}), DataError);
  CHECK_THROWS_AS(matrix_svg(m, {0, 2}), DataError);
}

TEST_CASE("partition boundaries are drawn") {
  const auto m = testing::matrix_from_grid({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
  const auto svg = matrix_svg(m, {0, 2, 1}, {}, Partition{{1, 1, 2}, {}});
  // two cluster changes along 0,2,1, each drawn horizontally and vertically
  CHECK(count(svg, "<line ") == 4);
}

TEST_CASE("rendering is deterministic") {
  std::mt19937_64 rng(4);
  const auto m = testing::matrix_from_grid(testing::random_grid(rng, 5));
  CHECK(matrix_svg(m, {0, 1, 2, 3, 4}) == matrix_svg(m, {0, 1, 2, 3, 4}));
}

TEST_CASE("dendrogram svg") {
  const Dendrogram two({"a", "b"}, {{0, 1, 2.5}});
  const auto svg = dendrogram_svg(two);
  CHECK(count(svg, "class=\"merge\"") == 1);
  CHECK(count(svg, "data-height=\"2.500000\"") == 1);

  const Dendrogram three({"a", "b", "c"}, {{0, 1, 1.0}, {3, 2, 4.0}});
  const auto swapped = three.swap_subtree(1);
  const std::regex heights("data-height=\"([0-9.]+)\"");
  auto collect = [&](const std::string& s) {
    std::vector<std::string> out;
    for (std::sregex_iterator it(s.begin(), s.end(), heights), end; it != end; ++it)
      out.push_back((*it)[1]);
    return out;
  };
  CHECK(collect(dendrogram_svg(three)) == collect(dendrogram_svg(swapped)));
  CHECK(dendrogram_svg(three) != dendrogram_svg(swapped));

  DendrogramStyle style;
  style.level_max = 10.0;
  CHECK(count(dendrogram_svg(three, style), ">10.0<") == 1);
}

TEST_CASE("dot export") {
  auto nodes = testing::plain_nodes(2);
  nodes[0].iso2 = "ES";
  const Network net(nodes, {{1, 0, 4.0}});
  const auto dot = skeleton_dot(net);
  CHECK(count(dot, "label=\"ES\"") == 1);
  CHECK(count(dot, " -> ") == 1);
  CHECK(count(dot, "penwidth=6.000") == 1);
  const auto empty = skeleton_dot(Network(nodes, {}));
  CHECK(count(empty, " -> ") == 0);
  CHECK(count(empty, "[label=") == 2);
}
