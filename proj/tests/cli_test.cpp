#include "toric/cli/commands.hpp"
#include "toric/fan_io.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace toric::cli;
using json = nlohmann::ordered_json;

namespace {

std::string data(const std::string& name) { return std::string(TORIC_TEST_DATA) + "/" + name + ".json"; }

Outcome call(const std::string& command, const std::string& fixture, Format format = Format::Text) {
  Options o;
  o.command = command;
  o.path = data(fixture);
  o.format = format;
  return run(o);
}

json result(const std::string& command, const std::string& fixture) {
  Outcome o = call(command, fixture);
  REQUIRE(o.exit_code == kOk);
  return o.report["result"];
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* const kFixtures[] = {"three_cone", "quadric", "torus2", "two_rays", "hollow_triangle"};

}  // namespace

TEST_CASE("validate") {
  Outcome ok = call("validate", "three_cone");
  CHECK(ok.exit_code == kOk);
  for (const auto& a : ok.report["result"]["axioms"]) CHECK(a["ok"].get<bool>());
  CHECK(ok.report["fan"]["maximal"] == 3);
  CHECK(call("validate", "torus2").exit_code == kOk);

  Outcome bad = call("validate", "overlapping");
  CHECK(bad.exit_code == kInvalidFan);
  CHECK_FALSE(bad.report["result"]["valid"].get<bool>());
  bool named = false;
  for (const auto& a : bad.report["result"]["axioms"]) {
    if (a["name"] == "intersection") named = !a["ok"].get<bool>() && a["pairs"] == json::parse("[[0, 1]]");
  }
  CHECK(named);
  CHECK(bad.out.find("(max cones 0 and 1)") != std::string::npos);

  Outcome other = call("brauer", "overlapping");
  CHECK(other.exit_code == kInvalidFan);
  CHECK(other.out.empty());
  CHECK(other.err.find("max cones 0 and 1") != std::string::npos);
}

TEST_CASE("invariants") {
  json e = result("invariants", "three_cone");
  CHECK(e["pic"]["text"] == "Z");
  CHECK(e["cl"]["text"] == "Z");
  CHECK(e["sf_rank"] == 4);
  CHECK(e["u_rank"] == 0);
  CHECK(e["nu"] == json::parse("[1, 1, 1]"));
  CHECK(e["singular_cones"].empty());
  json q = result("invariants", "quadric");
  CHECK(q["pic"]["text"] == "0");
  CHECK(q["cl"]["text"] == "Z/2");
  CHECK(q["cl"]["torsion"] == json::parse("[2]"));
  CHECK(q["singular_cones"] == json::parse("[[[1, 0], [1, 2]]]"));
  json t = result("invariants", "torus2");
  CHECK(t["pic"]["text"] == "0");
  CHECK(t["cl"]["text"] == "0");
  CHECK(t["u_rank"] == 2);
}

TEST_CASE("brauer") {
  CHECK(result("brauer", "three_cone")["total"]["text"] == "0");
  CHECK(result("brauer", "quadric")["total"]["text"] == "0");
  Outcome t = call("brauer", "torus2");
  CHECK(t.report["result"]["total"]["text"] == "Q/Z");
  CHECK(t.out.find("smooth part: Q/Z (symbol (m1,m2))") != std::string::npos);
  CHECK(result("brauer", "two_rays")["nu"] == json::parse("[1, 2]"));

  Options o;
  o.command = "brauer";
  o.path = data("hollow_triangle");
  o.emit_cocycles = true;
  Outcome h = run(o);
  REQUIRE(h.exit_code == kOk);
  const json& r = h.report["result"];
  CHECK(r["split_part"]["text"] == "Z/2");
  REQUIRE(r["cocycles"].size() == 1);
  CHECK(r["cocycles"][0]["cocycle_identity"].get<bool>());
  CHECK(r["cocycles"][0]["exponents"].size() == 1);
  o.path = data("three_cone");
  CHECK(run(o).report["result"]["cocycles"].empty());
}

TEST_CASE("resolve") {
  json q = result("resolve", "quadric");
  CHECK(q["certificate"]["ok"].get<bool>());
  CHECK(q["certificate"]["added_rays"] == json::parse("[[1, 1]]"));
  CHECK(q["fan"]["rays"] == json::parse("[[1, 0], [1, 1], [1, 2]]"));

  const auto dir = std::filesystem::temp_directory_path() / "toricbr_cli_test";
  std::filesystem::create_directories(dir);
  Options o;
  o.command = "resolve";
  o.path = data("three_cone");
  o.output = (dir / "e13.json").string();
  Outcome w = run(o);
  REQUIRE(w.exit_code == kOk);
  CHECK(w.report["result"]["certificate"]["added_rays"].empty());
  // Smooth input: the canonical form of the input itself.
  toric::FanFile in = toric::read_fan_file(data("three_cone"));
  toric::Fan f = toric::build_fan(in.rank, in.rays, in.max_cones);
  CHECK(slurp(*o.output) == toric::format_fan(f));

  o.path = data("quadric");
  o.output = (dir / "quadric.json").string();
  REQUIRE(run(o).exit_code == kOk);
  toric::FanFile back = toric::read_fan_file(*o.output);
  CHECK(back.rays.size() == 3);
  CHECK(back.max_cones.size() == 2);
  std::filesystem::remove_all(dir);

  o.output = "/nonexistent-dir/out.json";
  Outcome fail = run(o);
  CHECK(fail.exit_code == kWriteFailure);
  CHECK(fail.out.empty());
}

TEST_CASE("cech") {
  Options o;
  o.command = "cech";
  o.path = data("three_cone");
  o.degree = 1;
  CHECK(run(o).report["result"]["group"]["text"] == "0");
  o.degree = 0;
  Outcome h0 = run(o);
  CHECK(h0.report["result"]["group"]["text"] == "Z^4");
  CHECK(h0.report["result"]["dimensions"] == json::parse("[0, 9, 6]"));
  o.sheaf = "w";
  o.degree = 1;
  for (const char* name : kFixtures) {
    CAPTURE(name);
    o.path = data(name);
    CHECK(run(o).report["result"]["group"]["text"] == "0");
  }
  o.path = data("hollow_triangle");
  o.sheaf = "SF";
  CHECK(run(o).report["result"]["group"]["text"] == "Z/2");
}

TEST_CASE("exit codes") {
  CHECK(call("validate", "malformed").exit_code == kParseFailure);
  Outcome missing = call("invariants", "no_such_file");
  CHECK(missing.exit_code == kParseFailure);
  CHECK(missing.out.empty());
  CHECK_FALSE(missing.err.empty());
  CHECK(call("frobnicate", "three_cone").exit_code == kUsage);
  Options o;
  o.command = "cech";
  o.path = data("three_cone");
  o.sheaf = "v";
  CHECK(run(o).exit_code == kUsage);
  o.sheaf = "u";
  o.degree = -1;
  CHECK(run(o).exit_code == kUsage);
}

TEST_CASE("text and json agree and output is deterministic") {
  for (const char* command : {"validate", "invariants", "brauer", "resolve", "cech"}) {
    for (const char* name : kFixtures) {
      CAPTURE(command);
      CAPTURE(name);
      Outcome text = call(command, name);
      Outcome js = call(command, name, Format::Json);
      REQUIRE(text.exit_code == kOk);
      REQUIRE(js.exit_code == kOk);
      json parsed = json::parse(js.out);
      CHECK(parsed == js.report);
      CHECK(render_text(parsed) == text.out);
      CHECK(call(command, name).out == text.out);
      CHECK(call(command, name, Format::Json).out == js.out);
      CHECK(js.report.find("timing") == js.report.end());
    }
  }
}
