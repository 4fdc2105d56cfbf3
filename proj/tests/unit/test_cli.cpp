#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "flasque/error.hpp"
#include "flasque/io.hpp"
#include "flasque/klein.hpp"
#include "flasque/localfield.hpp"

using namespace flasque;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

Errc parse_code(const std::string& text) {
  try {
    parse_lattice_file(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("parsed");
  return Errc::ParseError;
}

json small_file() {
  return json::parse(R"({
    "group": {"elements": ["1", "s"], "table": [[0, 1], [1, 0]]},
    "lattices": {
      "Z": {"rank": 1, "action": {"1": [[1]], "s": [[1]]}},
      "sign": {"rank": 1, "action": {"1": [[1]], "s": [[-1]]}},
      "ZC2": {"rank": 2, "action": {"1": [[1, 0], [0, 1]], "s": [[0, 1], [1, 0]]}}
    },
    "maps": {"eps": {"dom": "ZC2", "cod": "Z", "matrix": [[1, 1]]}}
  })");
}

std::string temp_file(const std::string& contents) {
  std::string path = "/tmp/flasque_test_" + std::to_string(std::rand()) + ".json";
  std::ofstream(path) << contents;
  return path;
}

}  // namespace

TEST_CASE("report JSON round-trips") {
  CheckReport r;
  r.add("b_check", true, "statement with σ and τ", std::string("witness \"quoted\""));
  r.add("a_check", false, "another");
  json j = report_to_json(r);
  CHECK(j["overall"] == "fail");
  CHECK(j["checks"][0]["id"] == "a_check");
  CHECK_FALSE(j["checks"][0].contains("witness"));
  CHECK(report_from_json(json::parse(j.dump())) == r);
  CheckReport k = verify_klein();
  CHECK(report_from_json(json::parse(report_to_json(k).dump(2))) == k);
  CHECK(report_from_json(report_to_json(CheckReport{})) == CheckReport{});
}

TEST_CASE("malformed reports") {
  for (const char* bad : {R"({"checks": []})", R"({"overall": "pass"})",
                          R"({"overall": "pass", "checks": [{"id": "x", "status": "maybe", "statement": ""}]})",
                          R"({"overall": "pass", "checks": [{"id": "x", "status": "fail", "statement": ""}]})",
                          R"({"overall": "pass", "checks": [{"status": "pass", "statement": ""}]})"}) {
    try {
      report_from_json(json::parse(bad));
      FAIL(bad);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::ParseError);
    }
  }
}

TEST_CASE("text reports") {
  CheckReport r;
  r.add("x", true, "holds", std::string("w"));
  r.add("y", false, "fails");
  CHECK(report_to_text(r) == "PASS x: holds [w]\nFAIL y: fails\n2 checks, 1 failed\n");
}

TEST_CASE("lattice files") {
  LatticeFile f = parse_lattice_file(small_file().dump());
  CHECK(f.group->order() == 2);
  CHECK(f.lattice("sign").action(1) == IntMatrix{{-1}});
  CHECK(f.map("eps").matrix() == IntMatrix{{1, 1}});
  CHECK(f.maps.at("eps").dom == "ZC2");
  LatticeFile again = parse_lattice_file(lattice_file_to_json(f).dump());
  CHECK(again.lattices == f.lattices);

  LatticeFile preset = klein_preset();
  LatticeFile round = parse_lattice_file(lattice_file_to_json(preset).dump());
  CHECK(round.lattices == preset.lattices);
  for (const auto& [name, m] : preset.maps) CHECK(round.map(name).matrix() == m.map.matrix());
  CHECK(lattice_file_to_json(round) == lattice_file_to_json(preset));

  LatticeFile shipped = read_lattice_file(FLASQUE_DATA_DIR "/klein.json");
  CHECK(lattice_file_to_json(shipped) == lattice_file_to_json(preset));
  CHECK(shipped.lattice("Tstar") == build_T_star().Tstar);
}

TEST_CASE("big integers in lattice files") {
  json j = small_file();
  j["lattices"]["big"] = {{"rank", 2}, {"action", {{"1", {{1, 0}, {0, 1}}}, {"s", {{1, "123456789012345678901234567890"}, {0, 1}}}}}};
  // s² has corner 2N, so this is not an action of C2.
  CHECK(parse_code(j.dump()) == Errc::NotAHomomorphism);
  j["lattices"]["big"]["action"]["s"] = {{-1, 0}, {"123456789012345678901234567890", 1}};
  LatticeFile f = parse_lattice_file(j.dump());
  CHECK(f.lattice("big").action(1)(1, 0) == Integer("123456789012345678901234567890"));
  CHECK(parse_lattice_file(lattice_file_to_json(f).dump()).lattices == f.lattices);
}

TEST_CASE("lattice file errors") {
  CHECK(parse_code("{not json") == Errc::ParseError);
  CHECK(parse_code("[]") == Errc::ParseError);
  json j = small_file();
  j["lattices"]["Z"]["action"].erase("1");
  CHECK(parse_code(j.dump()) == Errc::ParseError);
  j = small_file();
  j["lattices"]["Z"]["action"]["t"] = {{1}};
  CHECK(parse_code(j.dump()) == Errc::UnknownName);
  j = small_file();
  j["lattices"]["ZC2"]["action"]["s"] = {{0, 1}};
  CHECK(parse_code(j.dump()) == Errc::ParseError);
  j = small_file();
  j["lattices"]["Z"]["rank"] = -1;
  CHECK(parse_code(j.dump()) == Errc::ParseError);
  j = small_file();
  j["lattices"]["Z"]["action"]["s"] = {{2}};
  CHECK(parse_code(j.dump()) == Errc::NotAHomomorphism);
  j = small_file();
  j["maps"]["eps"]["cod"] = "nowhere";
  CHECK(parse_code(j.dump()) == Errc::UnknownName);
  j = small_file();
  j["maps"]["eps"]["matrix"] = {{1, -1}};
  CHECK(parse_code(j.dump()) == Errc::NotEquivariant);
  j = small_file();
  j["group"]["table"] = {{0, 1}, {1, 1}};
  CHECK(parse_code(j.dump()) == Errc::NoInverse);
  j = small_file();
  j["lattices"]["Z"]["action"]["s"] = {{"one"}};
  CHECK(parse_code(j.dump()) == Errc::ParseError);
}

TEST_CASE("subgroup specifications") {
  GroupPtr g = klein_four();
  CHECK(parse_subgroup(g, "G") == Subgroup::whole(g));
  CHECK(parse_subgroup(g, "1") == Subgroup::trivial(g));
  CHECK(parse_subgroup(g, "σ").order() == 2);
  CHECK(parse_subgroup(g, "σ,τ") == Subgroup::whole(g));
  CHECK_THROWS_AS(parse_subgroup(g, "ρ"), Error);
  CHECK_THROWS_AS(parse_subgroup(g, ""), Error);
  CHECK_THROWS_AS(parse_subgroup(g, "σ,,τ"), Error);
}

TEST_CASE("verify exit codes follow the report") {
  CHECK(run({"verify", "local"}).code == 0);
  CHECK(run({"verify", "global"}).code == 0);
  Run klein = run({"verify", "klein", "--format", "json"});
  CheckReport report = report_from_json(json::parse(klein.out));
  CHECK(report == verify_klein());
  CHECK(klein.code == (report.passed() ? 0 : 1));
  REQUIRE(report.find("lemma_4_1_ii") != nullptr);
  CHECK(report.find("lemma_4_1_ii")->passed);
  Run all = run({"verify", "all"});
  CHECK(all.code == (all.out.find("FAIL ") == std::string::npos ? 0 : 1));
  CHECK(run({"verify", "all"}).out == all.out);
  CHECK(run({"verify", "bogus"}).code == 2);
  CHECK(run({"verify"}).code == 2);
  CHECK(run({"verify", "local", "--format", "xml"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("cohom") {
  CHECK(run({"cohom", "IG", "G", "1"}).out == "Z/4\n");
  CHECK(run({"cohom", "ZG", "G", "1"}).out == "0\n");
  CHECK(run({"cohom", "Z", "G", "0"}).out == "Z/4\n");
  CHECK(run({"cohom", "--preset", "klein", "IG", "G", "-1"}).out == "Z/2 + Z/2\n");
  CHECK(run({"cohom", "Z", "σ", "0"}).out == "Z/2\n");
  CHECK(run({"cohom", "Z", "G", "2"}).code == 2);
  CHECK(run({"cohom", "Q", "G", "1"}).code == 2);
  CHECK(run({"cohom", "Z", "ρ", "1"}).code == 2);
  CHECK(run({"cohom", "--preset", "local", "Z", "G", "1"}).code == 2);
  const std::string path = temp_file(small_file().dump());
  CHECK(run({"cohom", "--file", path, "sign", "G", "1"}).out == "Z/2\n");
  CHECK(run({"cohom", "--file", path, "sign", "G", "0"}).out == "0\n");
  CHECK(run({"cohom", "--file", path, "--preset", "klein", "Z", "G", "0"}).code == 2);
  CHECK(run({"cohom", "--file", "/nonexistent.json", "Z", "G", "0"}).code == 2);
  std::remove(path.c_str());
}

TEST_CASE("resolve and export") {
  Run paper = run({"resolve", "Tstar", "--method", "paper"});
  CHECK(paper.code == 0);
  CHECK(paper.out.find("F rank 5\n") != std::string::npos);
  CHECK(paper.out.find("P rank 9") != std::string::npos);
  CHECK(paper.out.find("coflasque: true") != std::string::npos);
  Run z = run({"resolve", "Z"});
  CHECK(z.code == 0);
  CHECK(z.out.find("coflasque: true") != std::string::npos);
  CHECK(z.out.find("exact: true") != std::string::npos);
  CHECK(run({"resolve"}).code == 2);
  CHECK(run({"resolve", "Z", "--method", "paper"}).code == 2);
  CHECK(run({"resolve", "Z", "--method", "magic"}).code == 2);
  Run exported = run({"export"});
  CHECK(exported.code == 0);
  CHECK(parse_lattice_file(exported.out).lattices == klein_preset().lattices);
  CHECK(run({"export", "--preset", "global"}).code == 2);
}
