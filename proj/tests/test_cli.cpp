#include <doctest.h>

#include <json.hpp>

#include "sqdiff/cli.hpp"
#include "sqdiff/json_io.hpp"
#include "test_support.hpp"

using namespace sqdiff;
using test::Q;
using test::T;
using nj = nlohmann::json;

namespace {

std::vector<nj> lines(const std::string& s) {
  std::vector<nj> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);)
    if (!l.empty()) out.push_back(nj::parse(l));
  return out;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("verify") {
  const auto r = test::run_cli({"verify", "697", "185", "153"});
  CHECK(r.code == sqdiff::cli::kExitOk);
  CHECK(nj::parse(r.out) == nj{{"x", "697"}, {"y", "185"}, {"z", "153"}, {"t", "672"}, {"u", "680"}, {"v", "104"}});
  const auto bad = test::run_cli({"verify", "3", "2", "1"});
  CHECK(bad.code == sqdiff::cli::kExitCoreError);
  CHECK(bad.out.empty());
  CHECK(nj::parse(bad.err)["error"] == "validation_error");
  const auto np = test::run_cli({"verify", "1394", "370", "306"});
  CHECK(np.code == sqdiff::cli::kExitCoreError);
}

TEST_CASE("generate") {
  const auto r = test::run_cli({"generate", "--m", "2/1"});
  REQUIRE(r.code == sqdiff::cli::kExitOk);
  const nj j = nj::parse(r.out);
  CHECK(j["triple"]["x"] == "1564901");
  CHECK(j["triple"]["v"] == "476560");
  CHECK(j["params"]["s"] == "-60/23");
  CHECK(j["params"]["q"] == "-74/23");
  CHECK(test::run_cli({"generate", "--m", "1"}).code == sqdiff::cli::kExitCoreError);
  CHECK(test::run_cli({"generate", "--m", "abc"}).code == sqdiff::cli::kExitUsage);
}

TEST_CASE("convert both ways") {
  auto r = test::run_cli({"convert", "--to", "hyperbolic", "--triple", "697,185,153"});
  CHECK(nj::parse(r.out) == nj{{"a", "37/5"}, {"b", "17/9"}, {"c", "9/1"}});
  r = test::run_cli({"convert", "--to", "euler", "--hyperbolic", "1201/350,97/51,30/7"});
  CHECK(nj::parse(r.out)["x"] == "1564901");
  r = test::run_cli({"convert", "--to", "euler", "--sumdiff", "-856350,949986,993250"});
  CHECK(nj::parse(r.out)["x"] == "697");
  r = test::run_cli({"convert", "--to", "cuboid", "--triple", "697,185,153"});
  CHECK(r.code == sqdiff::cli::kExitOk);
  CHECK(test::run_cli({"convert", "--to", "nowhere", "--triple", "697,185,153"}).code == sqdiff::cli::kExitUsage);
}

TEST_CASE("cycle returns to the start") {
  const auto r = test::run_cli({"cycle", "--triple", "697,185,153", "--steps", "5"});
  REQUIRE(r.code == sqdiff::cli::kExitOk);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 5);
  CHECK(ls[0]["x"] == "925");
  CHECK(ls[4]["x"] == "697");
  CHECK(ls[4]["z"] == "153");
  const auto h = test::run_cli({"cycle", "--hyperbolic", "37/5,17/9,9", "--steps", "1"});
  CHECK(lines(h.out).at(0) == nj{{"a", "17/9"}, {"b", "7/6"}, {"c", "27/14"}});
}

TEST_CASE("double") {
  const auto r = test::run_cli({"double", "--triple", "697,185,153", "--steps", "2"});
  REQUIRE(r.code == sqdiff::cli::kExitOk);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 2);
  CHECK(ls[0]["x"] == "496625");
  CHECK(ls[0]["v"] == "205632");
}

TEST_CASE("fiber") {
  auto r = test::run_cli({"fiber", "--triple", "697,185,153"});
  REQUIRE(r.code == sqdiff::cli::kExitOk);
  nj j = nj::parse(r.out);
  CHECK(j["m"] == "13/5");
  CHECK(j["a"] == "169/144");
  CHECK(j["point"] == nj{{"s", "1/4"}, {"w", "105/64"}});
  r = test::run_cli({"fiber", "--a", "4/3", "--op", "double", "--point", "P"});
  CHECK(nj::parse(r.out)["result"] == nj{{"s", "-60/23"}, {"w", "-1551/529"}});
  r = test::run_cli({"fiber", "--a", "4/3", "--op", "double", "--point", "T"});
  CHECK(nj::parse(r.out)["point"] == nj{{"s", "-2/1"}, {"w", "-1/1"}});
  CHECK(nj::parse(r.out)["result"] == nj{{"s", "0/1"}, {"w", "1/1"}});
  r = test::run_cli({"fiber", "--a", "4/3", "--op", "info"});
  CHECK(r.code == sqdiff::cli::kExitOk);
  CHECK(r.out.find("1728") != std::string::npos);
  r = test::run_cli({"fiber", "--a", "4/3", "--op", "contains", "--point", "1,1"});
  CHECK(r.code == sqdiff::cli::kExitOk);
  CHECK(r.out.find("false") != std::string::npos);
  CHECK(test::run_cli({"fiber", "--a", "1", "--op", "info"}).code == sqdiff::cli::kExitCoreError);
}

TEST_CASE("search output and resume through the CLI") {
  auto r = test::run_cli({"search", "--bound", "1000", "--format", "csv"});
  CHECK(r.code == sqdiff::cli::kExitOk);
  CHECK(r.out.rfind("x,y,z,t,u,v,m\n697,185,153,672,680,104,13/5\n", 0) == 0);
  CHECK(nj::parse(r.err.substr(0, r.err.find('\n')))["count"] == "4");

  const auto naive = test::run_cli({"search", "--bound", "1000", "--format", "csv", "--naive"});
  CHECK(naive.out == r.out);

  test::TempDir dir("cli");
  const std::string cp = (dir / "cp.json").string(), out = (dir / "out.jsonl").string();
  const std::vector<std::string> base{"search", "--bound", "20000", "--block-width", "3000",
                                      "--checkpoint", cp, "--output", out, "--max-blocks", "2"};
  r = test::run_cli(base);
  CHECK(r.code == sqdiff::cli::kExitInterrupted);
  r = test::run_cli(base);
  CHECK(r.code == sqdiff::cli::kExitInterrupted);
  r = test::run_cli(base);
  CHECK(r.code == sqdiff::cli::kExitInterrupted);
  r = test::run_cli(base);
  CHECK(r.code == sqdiff::cli::kExitOk);
  const auto full = test::run_cli({"search", "--bound", "20000"});
  CHECK(test::slurp(out) == full.out);
  // changed bound against the same checkpoint is a config error
  std::vector<std::string> other = base;
  other[2] = "30000";
  CHECK(test::run_cli(other).code == sqdiff::cli::kExitCoreError);
}

TEST_CASE("usage errors, help and version") {
  CHECK(test::run_cli({}).code == sqdiff::cli::kExitUsage);
  CHECK(test::run_cli({"bogus"}).code == sqdiff::cli::kExitUsage);
  CHECK(test::run_cli({"verify", "1", "2"}).code == sqdiff::cli::kExitUsage);
  CHECK(test::run_cli({"search", "--bound", "1"}).code == sqdiff::cli::kExitCoreError);
  auto v = test::run_cli({"--version"});
  CHECK(nj::parse(v.out)["version"] == std::string(sqdiff::cli::kVersion));
  auto h = test::run_cli({"--help"});
  CHECK(h.code == sqdiff::cli::kExitOk);
  CHECK(nj::parse(h.out).contains("subcommands"));
  auto hs = test::run_cli({"search", "--help"});
  CHECK(hs.out.find("--max-blocks") != std::string::npos);
}

TEST_CASE("JSON round trips") {
  const EulerTriple e = T(697, 185, 153);
  CHECK(json::euler_from_json(json::to_json(e)) == e);
  const SolutionRecord rec = make_record(e);
  CHECK(json::record_from_json(json::to_json(rec)) == rec);
  const HyperbolicTriple h{Q(37, 5), Q(17, 9), Q(9)};
  CHECK(json::hyperbolic_from_json(json::to_json(h)) == h);
  const SectionParams p = params_from_m(Q(2));
  CHECK(json::params_from_json(json::to_json(p)) == p);
  const QuarticPoint pt = QuarticPoint::affine(Q(1, 4), Q(105, 64));
  CHECK(json::point_from_json(json::to_json(pt)) == pt);
  const QuarticPoint inf = QuarticPoint::infinity(InfinityBranch::Minus);
  CHECK(json::point_from_json(json::to_json(inf)) == inf);
  // non-canonical rationals and invalid triples are rejected
  auto bad = json::to_json(h);
  bad["a"] = "74/10";
  CHECK_THROWS(json::hyperbolic_from_json(bad));
  auto badt = json::to_json(e);
  badt["z"] = "154";
  CHECK_THROWS(json::euler_from_json(badt));
}

}  // TEST_SUITE
