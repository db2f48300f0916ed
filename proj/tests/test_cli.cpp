#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "polaritylab/canon.hpp"
#include "polaritylab/graph6.hpp"
#include "polaritylab/named.hpp"
#include "polaritylab/polarity.hpp"

using namespace polaritylab;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) out.push_back(line);
  return out;
}

std::string g6(const Graph& g) { return graph6_encode(g); }

}  // namespace

TEST_CASE("recognize reads stdin") {
  const auto r = run({"recognize", "--class", "p4sparse"}, "Ch\n");
  CHECK(r.code == cli::ok);
  CHECK(r.out == "Ch true\n");
  const auto bad = run({"recognize", "--class", "p4sparse"}, g6(named::cycle(5)) + "\n");
  CHECK(bad.code == cli::negative);
  CHECK(bad.out.find("false certificate:") != std::string::npos);
}

TEST_CASE("obstruction enumeration prints nine graphs") {
  const auto r = run({"obstructions", "enumerate", "--class", "p4sparse", "--spec", "sk:2,1", "--max-n", "8"});
  CHECK(r.code == cli::ok);
  const auto out = lines(r.out);
  CHECK(out.size() == 9);
  for (const auto& line : out)
    CHECK_FALSE(satisfies(graph6_decode(line), PolarSpec::sk_polar(2, 1)));
}

TEST_CASE("polar prints a witness") {
  const auto r = run({"polar", "--spec", "sk:1,inf", g6(named::complete_bipartite(2, 3))});
  CHECK(r.code == cli::ok);
  CHECK(r.out.find(" true A=[0,1] B=[2,3,4]") != std::string::npos);
}

TEST_CASE("classify records") {
  const std::string spider = g6(catalog(NamedGraph::thin_spider(3)));
  const auto r = run({"--format", "json", "classify"}, "@\n" + g6(named::cycle(5)) + "\n" + spider + "\n!!\n");
  CHECK(r.code == cli::negative);
  const auto out = lines(r.out);
  REQUIRE(out.size() == 4);
  using nlohmann::json;
  CHECK(json::parse(out[0])["classes"] == json({true, true, true, true}));
  CHECK(json::parse(out[1])["classes"] == json({false, false, true, false}));
  const auto s = json::parse(out[2])["classes"];
  CHECK(s[1] == true);
  CHECK(s[2] == false);
  CHECK(json::parse(out[3]).contains("error"));
  CHECK(json::parse(out[1])["p4_count"] == 5);
}

TEST_CASE("golden exit codes") {
  struct Case {
    std::vector<std::string> args;
    int code;
  };
  const std::string c5 = g6(named::cycle(5));
  const std::string p5 = g6(named::path(5));
  const std::string spider = g6(catalog(NamedGraph::thin_spider(3)));
  const std::string two_p3 = g6(copies(2, named::path(3)));
  const std::string e6 = g6(named::e(6));
  const std::vector<Case> cases{
      {{"recognize", "--class", "cograph", "Ch"}, cli::negative},
      {{"recognize", "--class", "cograph", "@"}, cli::ok},
      {{"recognize", "--class", "p4sparse", c5}, cli::negative},
      {{"recognize", "--class", "p4extendible", c5}, cli::ok},
      {{"recognize", "--class", "p4sparse", spider}, cli::ok},
      {{"recognize", "--class", "p4extendible", spider}, cli::negative},
      {{"recognize", "--class", "62", c5}, cli::negative},
      {{"recognize", "--class", "p4sparse", p5}, cli::negative},
      {{"decompose", "--class", "p4sparse", spider}, cli::ok},
      {{"decompose", "--class", "p4extendible", spider}, cli::negative},
      {{"polar", "--spec", "sk:1,1", c5}, cli::negative},
      {{"polar", "--spec", "sk:2,1", c5}, cli::ok},
      {{"polar", "--spec", "unipolar", two_p3}, cli::negative},
      {{"obstructions", "check", "--spec", "unipolar", two_p3}, cli::ok},
      {{"obstructions", "check", "--spec", "sk:2,1", e6}, cli::ok},
      {{"obstructions", "check", "--spec", "sk:2,1", "Ch"}, cli::negative},
      {{"recognize", "--class", "chordal", "Ch"}, cli::usage},
      {{"polar", "--spec", "sk:x", "Ch"}, cli::usage},
      {{"recognize", "--class", "p4sparse", "C~~"}, cli::usage},
      {{"gen", "--class", "all", "--max-n", "11"}, cli::cap},
  };
  REQUIRE(cases.size() == 20);
  for (const auto& c : cases) {
    INFO(c.args[0] << ' ' << c.args.back());
    CHECK(run(c.args).code == c.code);
  }
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == cli::usage);
  CHECK(run({"frobnicate"}).code == cli::usage);
  CHECK(run({"recognize"}).code == cli::usage);
  CHECK(run({"--format", "xml", "classify"}).code == cli::usage);
  CHECK(run({"--workers", "0", "classify"}).code == cli::usage);
  CHECK(run({"obstructions", "catalog", "--id", "nope"}).code == cli::usage);
  CHECK(run({"--help"}).code == cli::ok);
}

TEST_CASE("JSON graph6 output round-trips") {
  const auto r = run({"--format", "json", "obstructions", "catalog", "--id", "polar-extendible"});
  REQUIRE(r.code == cli::ok);
  const auto out = lines(r.out);
  CHECK(out.size() == 14);
  for (const auto& line : out) {
    const auto record = nlohmann::json::parse(line);
    const Graph g = graph6_decode(record["graph6"].get<std::string>());
    CHECK(canonical_key(g).hex() == record["canonical"].get<std::string>());
    CHECK(g.order() == record["order"].get<int>());
  }
  const auto decomp = run({"--format", "json", "decompose", "--class", "p4extendible", g6(named::cycle(5))});
  const auto record = nlohmann::json::parse(decomp.out);
  CHECK(record["witness"][0]["extension"] == "C5");
}

TEST_CASE("output does not depend on the worker count") {
  const std::vector<std::vector<std::string>> commands{
      {"gen", "--class", "p4extendible", "--max-n", "7"},
      {"obstructions", "enumerate", "--class", "p4extendible", "--spec", "sk:2,1", "--max-n", "8"},
      {"obstructions", "enumerate", "--class", "all", "--spec", "unipolar", "--max-n", "7"},
      {"obstructions", "construct", "--class", "p4sparse", "--s", "3", "--max-n", "8"},
      {"verify", "--claim", "RECOGNIZERS", "--max-n", "6"},
      {"--format", "json", "classify", "Ch", "Dhc", "@"},
  };
  for (const auto& cmd : commands) {
    auto serial = cmd;
    serial.insert(serial.begin(), {"--workers", "1"});
    auto parallel = cmd;
    parallel.insert(parallel.begin(), {"--workers", "4"});
    const auto a = run(serial);
    const auto b = run(parallel);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("enumeration ceiling from the environment") {
  ::setenv("POLARITYLAB_MAX_N", "6", 1);
  CHECK(run({"gen", "--class", "cograph", "--max-n", "7"}).code == cli::cap);
  CHECK(run({"gen", "--class", "cograph", "--max-n", "6"}).code == cli::ok);
  ::unsetenv("POLARITYLAB_MAX_N");
  CHECK(run({"gen", "--class", "cograph", "--max-n", "10"}).code == cli::ok);
}

TEST_CASE("catalog listing and verify") {
  const auto ids = lines(run({"obstructions", "catalog"}).out);
  CHECK(std::find(ids.begin(), ids.end(), "unipolar-sparse") != ids.end());
  const auto v = run({"verify", "--claim", "NINE_THIRTEEN", "--max-n", "7"});
  CHECK(v.code == cli::ok);
  CHECK(v.out.rfind("PASS NINE_THIRTEEN n<=7", 0) == 0);
  CHECK(run({"verify", "--claim", "NOPE"}).code == cli::usage);
}
