#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "wnet/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = wnet::run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

const char* kToy = "*Vertices 2\n1 \"A\"\n2 \"B\"\n*Arcs\n1 2 3\n2 1 3\n";

const char* kNet =
    "*Vertices 4\n1 \"Alpha\"\n2 \"Beta\"\n3 \"Gamma\"\n4 \"Delta\"\n*Arcs\n"
    "1 2 5\n1 3 2\n2 1 4\n2 3 1\n3 4 7\n4 1 3\n4 2 2\n3 1 1\n1 4 1\n2 4 2\n3 2 1\n4 3 6\n";

fs::path scratch() {
  auto dir = fs::temp_directory_path() / "wnet_cli_test";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"info", "--no-such-flag"}).code == 2);
  CHECK(run({"kneigh", "--k", "zero"}, kToy).code == 2);
  CHECK(run({"pathfinder", "--r", "0.5"}, kToy).code == 2);
  CHECK(run({"transform"}, kToy).code == 2);
}

TEST_CASE("data errors exit with 1") {
  CHECK(run({"info", "/no/such/file.net"}).code == 1);
  const auto r = run({"info"}, "*Vertices 2\n*Arcs\n1 5 1\n");
  CHECK(r.code == 1);
  CHECK(r.err.find("line 3") != std::string::npos);
  CHECK(run({"info"}, "hello\n").code == 1);
}

TEST_CASE("help exits with 0") { CHECK(run({"--help"}).code == 0); }

TEST_CASE("info on stdin") {
  const auto r = run({"info", "-"}, kToy);
  CHECK(r.code == 0);
  CHECK(r.out.find("nodes: 2") != std::string::npos);
  CHECK(r.out.find("w_max: 3") != std::string::npos);
}

TEST_CASE("hits csv on the symmetric toy") {
  const auto r = run({"hits", "--format", "csv"}, kToy);
  REQUIRE(r.code == 0);
  CHECK(r.out.find("index,label,iso2,wod,wid,hub,aut,qh,qa") == 0);
  CHECK(r.out.find("0.7071067811865") != std::string::npos);
}

TEST_CASE("warnings go to standard error") {
  const auto r = run({"info"}, "*Vertices 2\n*Arcs\n1 2 1\n1 2 1\n");
  CHECK(r.code == 0);
  CHECK(r.err.find("warning:") != std::string::npos);
  CHECK(r.out.find("warning") == std::string::npos);
}

TEST_CASE("pscores top levels") {
  const auto r = run({"pscores", "--top", "1"}, kToy);
  CHECK(r.code == 0);
  // ties list the last node peeled first
  CHECK(r.out == "6: B A\n");
}

TEST_CASE("pipeline through files is byte-identical on rerun") {
  const auto dir = scratch();
  const auto net = (dir / "net.net").string();
  std::ofstream(net) << kNet;
  const auto pow = (dir / "pow.csv").string();
  const auto dis = (dir / "dis.csv").string();
  const auto den = (dir / "den.txt").string();
  const auto svg = (dir / "m.svg").string();
  const auto clu = (dir / "c.clu").string();
  REQUIRE(run({"transform", net, "--power", "0.1", "--out", pow}).code == 0);
  REQUIRE(run({"dissim", pow, "--method", "corrected_salton_1m", "--out", dis}).code == 0);
  REQUIRE(run({"cluster", "--method", "ward", "--dissim", dis, "--out", den, "--cut", "2", "--clu",
               clu})
              .code == 0);
  const auto m1 = run({"matrix", pow, "--order", den, "--partition", clu});
  REQUIRE(m1.code == 0);
  const auto m2 = run({"matrix", den, "--values", pow, "--partition", clu});
  REQUIRE(m2.code == 0);
  CHECK(m1.out == m2.out);
  CHECK(m1.out.find("<svg") != std::string::npos);
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"hits", net},
           {"kneigh", net, "--k", "2", "--format", "dot"},
           {"pathfinder", net, "--r", "2", "--q", "2"},
           {"pscores", net, "--mode", "out", "--format", "csv"},
           {"balassa", net, "--log2"},
           {"blockmodel", net, "--partition", clu, "--names", "x,y"},
           {"dendro", den},
           {"dot", net},
           {"dissim", net, "--method", "D2"}}) {
    const auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
}

TEST_CASE("ingest from csv") {
  const auto r = run({"ingest", "--source", "from", "--target", "to", "--count", "n"},
                     "from,to,n\nES,IT,3\nIT,ES,4\n");
  CHECK(r.code == 0);
  CHECK(r.out == "*Vertices 2\n1 \"ES\"\n2 \"IT\"\n*Arcs\n1 2 3\n2 1 4\n");
}
