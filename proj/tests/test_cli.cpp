#include <filesystem>
#include <fstream>
#include <sstream>

#include "coxaut/cli.hpp"
#include "coxaut/json_io.hpp"
#include "doctest.h"

using namespace coxaut;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path write_temp(const std::string& name, const std::string& content) {
  fs::path dir = fs::temp_directory_path() / "coxaut_cli_tests";
  fs::create_directories(dir);
  fs::path p = dir / name;
  std::ofstream f(p);
  f << content;
  return p;
}

const std::string kPath46 = "edge a b 4\nedge b c 6\n";
const std::string kStar = "edge x p1 4\nedge x p2 4\nedge x p3 4\n";
const std::string kShare = "edge a b 4\nedge a c 4\nedge b c 4\nedge b d 4\nedge c d 4\n";

}  // namespace

TEST_CASE("validate command") {
  auto good = write_temp("path46.cox", kPath46);
  auto r = run({"validate", good.string()});
  CHECK(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["valid"] == true);
  CHECK(j["nvb"] == true);

  auto bad = write_temp("star.cox", kStar);
  auto rb = run({"validate", bad.string()});
  CHECK(rb.code == 1);
  auto jb = Json::parse(rb.out);
  CHECK(jb["nvb"] == false);
  CHECK(jb["witnesses"]["branching_vertices"][0] == "x");
}

TEST_CASE("out command and exit codes") {
  auto star = write_temp("star.cox", kStar);
  CHECK(run({"out", star.string()}).code == 1);

  auto p = write_temp("path46.cox", kPath46);
  auto r = run({"out", p.string()});
  CHECK(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["finite"] == true);
  CHECK(j["order"] == 4);

  auto share = write_temp("share.cox", kShare);
  auto rs = run({"out", share.string(), "--assert-paper-formulas"});
  CHECK(rs.code == 0);  // the 2^k discrepancy is exempt from the assertion
  auto js = Json::parse(rs.out);
  CHECK(js["order"] == 8);
  CHECK(js["paper_2k_value"] == 16);

  auto tp = write_temp("tp.cox", "edge a b 4\nedge a c 4\nedge b c 4\nedge a d 4\n");
  auto rt = run({"out", tp.string()});
  CHECK(rt.code == 0);
  auto jt = Json::parse(rt.out);
  CHECK(jt["finite"] == false);
  CHECK(jt["witness"] == "a");
}

TEST_CASE("analyze command output shape") {
  auto share = write_temp("share.cox", kShare);
  auto r = run({"analyze", share.string()});
  CHECK(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["units"].size() == 2);
  CHECK(j["unit_graph"]["edges"][0]["type"] == 1);
  CHECK(j["tree"]["edges"].size() == 1);
}

TEST_CASE("aut-count command") {
  auto p = write_temp("path444.cox", "edge a b 4\nedge b c 4\nedge c d 4\n");
  auto r = run({"aut-count", p.string()});
  CHECK(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["finite"] == true);
  CHECK(j["exhaustive_count"] == 16);
  CHECK(j["enumerated"] == 16);

  auto tp = write_temp("tp.cox", "edge a b 4\nedge a c 4\nedge b c 4\nedge a d 4\n");
  auto rt = run({"aut-count", tp.string(), "--bound", "2"});
  auto jt = Json::parse(rt.out);
  CHECK(jt["finite"] == false);
  CHECK(jt["bounded_count"] == 10);
}

TEST_CASE("apply, invert, compose round trip through files") {
  auto p = write_temp("path46.cox", kPath46);
  auto aut = write_temp("aut.json", R"({
    "base": "1",
    "labels": [{"edge": [1, 0], "type": 6, "x": {"l": 1, "k": 3}}]
  })");

  auto ra = run({"apply", p.string(), "--aut", aut.string(), "--word", "a"});
  REQUIRE(ra.code == 0);
  auto ja = Json::parse(ra.out);
  CHECK(ja["image"] == "b a b");  // (ab) a (ba) after braid reduction

  auto ri = run({"invert", p.string(), "--aut", aut.string()});
  REQUIRE(ri.code == 0);
  auto inv = write_temp("inv.json", ri.out);

  auto rc = run({"compose", p.string(), "--aut", aut.string(), "--aut2", inv.string()});
  REQUIRE(rc.code == 0);
  auto jc = Json::parse(rc.out);
  CHECK(jc["canonical"]["base"] == "1");
  CHECK(jc["canonical"]["labels"].empty());
}

TEST_CASE("apply with a diagram permutation") {
  auto p = write_temp("path44.cox", "edge a b 4\nedge b c 4\n");
  auto aut = write_temp("flip.json", R"({"pi": {"a": "c", "b": "b", "c": "a"}})");
  auto r = run({"apply", p.string(), "--aut", aut.string(), "--word", "a b c"});
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out)["image"] == "c b a");
}

TEST_CASE("verify command succeeds on corpus diagrams") {
  for (const auto& [name, content] :
       {std::pair<std::string, std::string>{"share.cox", kShare},
        {"path46.cox", kPath46},
        {"tp.cox", "edge a b 4\nedge a c 4\nedge b c 4\nedge a d 4\n"}}) {
    auto f = write_temp(name, content);
    auto r = run({"verify", f.string(), "--pairs", "5"});
    INFO(r.out, r.err);
    CHECK(r.code == 0);
  }
}

TEST_CASE("decompose command") {
  auto d = write_temp("free.cox", "vertex p\nedge s t 4\nfactor 2 strongly_rigid\n");
  auto r = run({"decompose", d.string()});
  REQUIRE(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["factor_count"] == 2);
  CHECK(j["out_finite"] == true);
  CHECK(j["factors"][1]["strongly_rigid"] == true);

  auto three = write_temp("three.cox", "vertex x\nvertex y\nvertex z\n");
  CHECK(Json::parse(run({"decompose", three.string()}).out)["out_finite"] == false);
}

TEST_CASE("compose reports an unrepresentable canonical form") {
  // Both basepoint branches are interior and the squared label crosses the
  // modulus, so the composition exists only in family form.
  auto p = write_temp("awkward.cox", "edge m n 4\nedge n a 4\nedge a p 8\nedge p q 4\n");
  auto aut = write_temp("awk.json", R"({
    "labels": [{"edge": [0, 3], "type": 6, "x": {"l": 1, "k": 3}}]
  })");
  auto r = run({"compose", p.string(), "--aut", aut.string(), "--aut2", aut.string()});
  REQUIRE(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["canonical"].is_null());
  CHECK(j.contains("canonicalize_error"));
  CHECK(j["generator_images"]["m"] == "m");
  CHECK(j["generator_images"]["p"] == "p");  // (a p)^4 centralizes p
  CHECK(j["generator_images"]["q"] != "q");
}

TEST_CASE("deterministic output") {
  auto share = write_temp("share.cox", kShare);
  auto r1 = run({"out", share.string()});
  auto r2 = run({"out", share.string()});
  CHECK(r1.out == r2.out);
  auto v1 = run({"verify", share.string(), "--pairs", "3"});
  auto v2 = run({"verify", share.string(), "--pairs", "3"});
  CHECK(v1.out == v2.out);
}

TEST_CASE("text format renders the same data") {
  auto p = write_temp("path46.cox", kPath46);
  auto r = run({"validate", p.string(), "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out.find("valid = true") != std::string::npos);
}

TEST_CASE("budget exhaustion exits 2") {
  auto p = write_temp("share.cox", kShare);
  auto aut = write_temp("eps.json", R"({
    "labels": [{"edge": [0, 1], "type": 1, "epsilon": 1}]
  })");
  auto r = run({"apply", p.string(), "--aut", aut.string(), "--word",
                "a b c d a b c d a b", "--budget", "2"});
  CHECK(r.code == 2);
}

TEST_CASE("verify propagates budget exhaustion") {
  auto share = write_temp("share.cox", kShare);
  CHECK(run({"verify", share.string(), "--budget", "1"}).code == 2);
}

TEST_CASE("malformed input exits 1") {
  auto bad = write_temp("bad.cox", "edge a b\n");
  CHECK(run({"validate", bad.string()}).code == 1);
  CHECK(run({"analyze", "/nonexistent/file.cox"}).code == 1);
}

TEST_CASE("labeling JSON round-trips for random labelings") {
  std::mt19937_64 rng(91);
  for (const char* text :
       {"edge a b 4\nedge b c 6", "edge a b 4\nedge a c 4\nedge b c 4\nedge a d 4",
        "edge a s 4\nedge b s 4\nedge a b 4\nedge c s 4\nedge d s 4\nedge c d 4"}) {
    auto d = parse_diagram(text);
    auto s = analyze_structure(d);
    for (int i = 0; i < 10; ++i) {
      auto a = random_labeling(s, 2, rng);
      for (int k = 0; k < 3; ++k)
        a.base.push_back(static_cast<char>(rng() % d.rank()));
      auto back = parse_labeling(s, labeling_json(a), nullptr);
      CHECK(back == a);
    }
  }
}
