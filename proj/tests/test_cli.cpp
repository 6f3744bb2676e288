#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fuscat/cli.hpp"
#include "fuscat/io.hpp"
#include "fuscat/pointed.hpp"

using namespace fuscat;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "fuscat_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("indicators for C(Z/2, omega_1)") {
  const Result r = run({"indicators", "--group", "Z2", "--cocycle", "cyclic:2:1", "--max-n", "6", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.find("g,order,nu_1,nu_2,nu_3,nu_4,nu_5,nu_6,fsexp\n") != std::string::npos);
  CHECK(r.out.find("0,1,1,1,1,1,1,1,1\n") != std::string::npos);
  CHECK(r.out.find("1,2,0,-1,0,1,0,-1,4\n") != std::string::npos);
  CHECK(r.out.find("fsexp,4") != std::string::npos);
}

TEST_CASE("indicators on Z3 with t = 0") {
  const Result r = run({"indicators", "--group", "Z3", "--cocycle", "cyclic:3:0", "--max-n", "6", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.find("1,3,0,0,1,0,0,1,3\n") != std::string::npos);
}

TEST_CASE("the three renderings carry the same exact values") {
  const std::vector<std::string> base = {"indicators", "--group", "Z8", "--cocycle", "cyclic:8:3", "--max-n", "24"};
  auto with = [&](std::vector<std::string> extra) {
    auto a = base;
    a.insert(a.end(), extra.begin(), extra.end());
    return run(a);
  };
  const Result json = with({"--format", "json"});
  const Result csv = with({"--format", "csv"});
  const Result table = with({"--format", "table"});
  REQUIRE(json.code == 0);
  const Json j = Json::parse(json.out);
  const PointedCategory c(omega_t(8, 3));
  for (const auto& row : j["indicators"]) {
    const Element g = static_cast<Element>(std::stoul(row["g"].get<std::string>()));
    for (std::uint64_t n = 1; n <= 24; ++n) {
      const auto& cell = row["nu_" + std::to_string(n)];
      const Cyclotomic v = cyclotomic_from_json(cell["value"]);
      CHECK(v == indicator(c, g, n));
      CHECK(!cell.contains("approx"));
      const std::string exact = cell["exact"].get<std::string>();
      CHECK(csv.out.find(exact) != std::string::npos);
      CHECK(table.out.find(exact) != std::string::npos);
    }
  }
  CHECK(j["summary"]["fsexp"] == 64);
  const Result approx = with({"--format", "json", "--approx"});
  const Json ja = Json::parse(approx.out);
  CHECK(ja["indicators"][1]["nu_8"]["approx"] == "-0.707106781187+0.707106781187i");
  CHECK(ja["indicators"][1]["nu_8"]["exact"] == j["indicators"][1]["nu_8"]["exact"]);
}

TEST_CASE("fsexp reports both routes") {
  const Result r = run({"fsexp", "--group", "Z6", "--cocycle", "cyclic:6:1", "--format", "json"});
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["summary"]["fsexp_lcm_formula"] == 36);
  CHECK(j["summary"]["fsexp_tube"] == 36);
  CHECK(j["objects"].size() == 6);
  CHECK(run({"fsexp", "--group", "S3"}).out.find("fsexp_tube: 6") != std::string::npos);
  CHECK(run({"fsexp", "--group", "Z2", "--cocycle", "cyclic:2:1"}).out.find("fsexp_tube: 4") != std::string::npos);
  const Result fast = run({"fsexp", "--group", "Z6", "--cocycle", "cyclic:6:1", "--level", "fast"});
  CHECK(fast.code == 0);
  CHECK(fast.out.find("fsexp_tube") == std::string::npos);
}

TEST_CASE("fsexp with a cocycle file") {
  const auto w = scratch("s3.json");
  std::ofstream(w) << to_json(cohomology_basis(*builtin_group("S3"), 6).representatives.front(), "S3").dump();
  const Result r = run({"fsexp", "--group", "S3", "--cocycle", "file:" + w.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("fsexp_lcm_formula: 36") != std::string::npos);
}

TEST_CASE("tube verify") {
  const Result r = run({"tube", "verify", "--group", "Z4", "--cocycle", "cyclic:4:1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("PASS indicators_match_pointed") != std::string::npos);
}

TEST_CASE("cocycle commands") {
  const Result r = run({"cocycle", "class-order", "--group", "Z8", "--cocycle", "cyclic:8:2"});
  CHECK(r.code == 0);
  CHECK(r.out == "class_order: 4\n");
  const Result chk = run({"cocycle", "check", "--group", "Z2xZ2", "--cocycle", "basis:2", "--format", "json"});
  CHECK(chk.code == 0);
  const Result basis = run({"cocycle", "basis", "--group", "Z2xZ2", "--modulus", "2", "--format", "json"});
  CHECK(basis.code == 0);
  const Json j = Json::parse(basis.out);
  CHECK(j["basis"].size() == 4);
  CHECK(j["representatives"].size() == 4);
  const Result gauge = run({"cocycle", "gauge", "--group", "S3", "--cocycle", "basis:0", "--samples", "10", "--seed", "9"});
  CHECK(gauge.code == 0);
  CHECK(gauge.out.find("10/10 samples, seed 9") != std::string::npos);
}

TEST_CASE("malformed cocycles exit with 2") {
  const auto bad = scratch("bad.json");
  std::ofstream(bad) << R"({"group": "Z2", "modulus": 4, "exponents": [0,0,0,0,0,0,0,1]})";
  const Result r = run({"indicators", "--group", "Z2", "--cocycle", "file:" + bad.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("3-cocycle identity") != std::string::npos);
  CHECK(run({"indicators", "--group", "Z2", "--cocycle", "cyclic:3:1"}).code == 2);
  CHECK(run({"indicators", "--group", "Z2", "--cocycle", "nonsense"}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"indicators"}).code == 2);
  CHECK(run({"indicators", "--group", "Z2", "--format", "xml"}).code == 2);
  CHECK(run({"indicators", "--group", "Q8"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("group order guard") {
  ::setenv("FUSCAT_MAX_GROUP_ORDER", "4", 1);
  const Result r = run({"indicators", "--group", "S3"});
  ::unsetenv("FUSCAT_MAX_GROUP_ORDER");
  CHECK(r.code == 4);
  CHECK(r.err.find("FUSCAT_MAX_GROUP_ORDER") != std::string::npos);
  CHECK(run({"indicators", "--group", "S3"}).code == 0);
  CHECK(run({"indicators", "--group", "Z65"}).code == 4);
}

TEST_CASE("mtc commands") {
  const Result d = run({"mtc", "--fixture", "double-semion", "diagnostics", "--format", "json"});
  CHECK(d.code == 0);
  const Json j = Json::parse(d.out);
  CHECK(j["summary"]["fsexp"] == 4);
  CHECK(j["summary"]["exp"] == 2);
  CHECK(j["summary"]["ratio"] == 2);
  CHECK(run({"mtc", "--fixture", "toric", "diagnostics"}).code == 0);

  const auto file = scratch("ds.json");
  std::ofstream(file) << to_json(modular_fixture("double-semion")).dump();
  const Result ind = run({"mtc", "--file", file.string(), "indicators", "--max-n", "12", "--format", "csv"});
  CHECK(ind.code == 0);
  CHECK(ind.out.find("s,0,-1,0,1,0,-1,0,1,0,-1,0,1,4\n") != std::string::npos);
  CHECK(run({"mtc", "--fixture", "toric", "fusion"}).out.find("e  m  f  1") != std::string::npos);
  CHECK(run({"mtc", "indicators"}).code == 2);
}

TEST_CASE("failed verification exits with 1") {
  auto m = to_json(modular_fixture("double-semion"));
  m["twists"][3] = {{"num", 1}, {"den", 3}};
  const auto file = scratch("inconsistent.json");
  std::ofstream(file) << m.dump();
  const Result r = run({"mtc", "--file", file.string(), "diagnostics"});
  CHECK(r.code == 1);
  CHECK(r.out.find("FAIL nu2_in_0_pm1") != std::string::npos);
}

TEST_CASE("--out writes the report to a file") {
  const auto file = scratch("report.txt");
  std::filesystem::remove(file);
  const Result r = run({"cocycle", "class-order", "--group", "Z8", "--cocycle", "cyclic:8:2", "--out", file.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(file);
  std::string line;
  std::getline(in, line);
  CHECK(line == "class_order: 4");
}
