#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "test_helpers.hpp"
#include "unihyp/hg_format.hpp"
#include "unihyp/invariants.hpp"

using namespace unihyp;
using namespace unihyp::testing;
using Json = nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(UNIHYP_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  RunResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.output.append(buf.data(), n);
  int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = std::string("cli_") + name + ".hg";
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("spectrum command on the single 3-edge") {
  std::string path = write_temp("three", "e 1 2 3\n");
  RunResult res = run_cli("spectrum --kind UL " + path);
  REQUIRE(res.exit_code == 0);
  Json j = Json::parse(res.output);
  CHECK(j["charpoly"] == Json::array({"0", "0", "0", "-8", "12", "-6", "1"}));
  std::vector<double> values = j["values"].get<std::vector<double>>();
  REQUIRE(values.size() == 6);
  CHECK(values[0] == doctest::Approx(2.0));
  CHECK(values[5] == doctest::Approx(0.0));
}

TEST_CASE("components command reproduces the published class list") {
  std::string path = write_temp("paper32", "e 1 2 3\ne 3 4\ne 4 5 6\ne 5 6\n");
  RunResult res = run_cli("components " + path);
  REQUIRE(res.exit_code == 0);
  Json j = Json::parse(res.output);
  CHECK(j["class_count"] == 4);
  Json want = Json::array({Json::array({Json::array({"1"}), Json::array({"2", "3"})}),
                           Json::array({Json::array({"2"}), Json::array({"1", "3"})}),
                           Json::array({Json::array({"3"}), Json::array({"4"}),
                                        Json::array({"1", "2"}), Json::array({"5", "6"})}),
                           Json::array({Json::array({"5"}), Json::array({"6"}),
                                        Json::array({"4", "5"}), Json::array({"4", "6"})})});
  Json got = Json::array();
  for (const auto& cls : j["classes"]) got.push_back(cls["members"]);
  CHECK(got == want);
}

TEST_CASE("distance command on the ten-vertex example") {
  std::string text;
  {
    Hypergraph h = uni_connected_ten();
    text = emit_hg(h);
  }
  std::string path = write_temp("ten", text);
  RunResult res = run_cli("distance --mode UD --from 1 --to 4 " + path);
  REQUIRE(res.exit_code == 0);
  CHECK(Json::parse(res.output)["distance"] == 2);
  RunResult res2 = run_cli("distance --mode SUD --from 1 --to 6 " + path);
  REQUIRE(res2.exit_code == 0);
  CHECK(Json::parse(res2.output)["distance"] == 4);
}

TEST_CASE("set-mode distance takes comma-joined parts") {
  std::string path = write_temp("four", emit_hg(deeply_edge_exact_four()));
  RunResult res = run_cli("distance --mode EESD --from 1,4 --to 2,4 " + path);
  REQUIRE(res.exit_code == 0);
  CHECK(Json::parse(res.output)["distance"] == 4);
}

TEST_CASE("infinite distances serialize as the string inf") {
  std::string path = write_temp("inf", "e 1 2 3\n");
  RunResult res = run_cli("distance --mode ESD --from 1 --to 2 " + path);
  REQUIRE(res.exit_code == 0);
  CHECK(Json::parse(res.output)["distance"] == "inf");
}

TEST_CASE("matrix command emits labels in canonical order") {
  std::string path = write_temp("k2", "e 1 2\n");
  RunResult res = run_cli("matrix --kind UL " + path);
  REQUIRE(res.exit_code == 0);
  Json j = Json::parse(res.output);
  CHECK(j["order"] == 2);
  CHECK(j["rows"] == Json::array({Json::array({1, -1}), Json::array({-1, 1})}));
  RunResult csv = run_cli("matrix --kind UL --csv " + path);
  CHECK(csv.output == "1,-1\n-1,1\n");
}

TEST_CASE("cheeger and spanning commands") {
  std::string p4 = write_temp("p4", "e 1 2\ne 2 3\ne 3 4\n");
  RunResult ch = run_cli("cheeger " + p4);
  REQUIRE(ch.exit_code == 0);
  CHECK(Json::parse(ch.output)["uc"] == "1/3");

  std::string p3 = write_temp("p3", "e 1 2\ne 2 3\n");
  RunResult sp = run_cli("spanning --enumerate --limit 10 " + p3);
  REQUIRE(sp.exit_code == 0);
  Json j = Json::parse(sp.output);
  CHECK(j["count"] == "1");
  CHECK(j["pairs"].size() == 1);
}

TEST_CASE("parse errors exit with code 2 and structured detail") {
  std::string path = write_temp("bad", "e 1 1 2\n");
  RunResult res = run_cli("matrix --kind U " + path);
  CHECK(res.exit_code == 2);
  Json j = Json::parse(res.output);
  CHECK(j["error"] == "parse-error");
}

TEST_CASE("size cap exits with code 3") {
  std::string path = write_temp("cap", emit_hg(inter_uni_fourteen()));
  RunResult res = run_cli("distance --mode IUD --from 1 --to 14 --cap 5 " + path);
  CHECK(res.exit_code == 3);
  CHECK(Json::parse(res.output)["error"] == "size-cap");
}

TEST_CASE("verify runs are byte-identical") {
  std::string path = write_temp("det", emit_hg(six_vertex_paper_example()));
  RunResult a = run_cli("verify " + path);
  RunResult b = run_cli("verify " + path);
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(!a.output.empty());
}

TEST_CASE("enumerate and scan commands") {
  RunResult en = run_cli("enumerate --n 3 --max-edge-size 3");
  REQUIRE(en.exit_code == 0);
  CHECK(Json::parse(en.output)["count"] == 16);

  std::string f1 = write_temp("scan_a", "e 1 2\ne 3 4\ne 5 6\n");
  std::string f2 = write_temp("scan_b", "e 1 2 3\n");
  RunResult sc = run_cli("scan --kind U " + f1 + " " + f2);
  REQUIRE(sc.exit_code == 0);
  Json j = Json::parse(sc.output);
  REQUIRE(j["groups"].size() == 1);
  CHECK(j["groups"][0]["nonisomorphic_cospectral"] == true);
}

TEST_CASE("round-trip parse and emit over the small-corpus enumerations") {
  int count = 0;
  auto check_roundtrip = [&](const Hypergraph& h) {
    Hypergraph back = parse_hg(emit_hg(h));
    CHECK(back == h);
    ++count;
    return true;
  };
  enumerate_hypergraphs({.n = 4, .max_edge_size = 4, .max_edges = -1}, check_roundtrip);
  enumerate_hypergraphs({.n = 5, .max_edge_size = 5, .max_edges = 2}, check_roundtrip);
  CHECK(count == 2048 + 352);
  // multiplicities and named isolated vertices round-trip too
  Hypergraph multi = Hypergraph::from_token_edges({{{"1", "2"}, 3}, {{"2", "3", "4"}, 2}}, {"z"});
  CHECK(parse_hg(emit_hg(multi)) == multi);
}
