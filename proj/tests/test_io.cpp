#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "fuscat/io.hpp"

using namespace fuscat;

namespace {

std::filesystem::path scratch_dir() {
  auto p = std::filesystem::temp_directory_path() / "fuscat_io_test";
  std::filesystem::create_directories(p);
  return p;
}

void write(const std::filesystem::path& p, const Json& j) { std::ofstream(p) << j.dump(); }

}  // namespace

TEST_CASE("cyclotomic JSON round trip") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const std::uint64_t n = 1 + rng() % 24;
    std::vector<Rational> c(n);
    for (auto& x : c) x = Rational(static_cast<long>(rng() % 9) - 4, 1 + rng() % 5);
    const Cyclotomic x = Cyclotomic::from_coeffs(n, c);
    CHECK(cyclotomic_from_json(Json::parse(to_json(x).dump())) == x);
  }
}

TEST_CASE("cyclotomic JSON accepts several coefficient spellings") {
  const Json j = Json::parse(R"({"conductor": 4, "coeffs": [["1","2"], "-3/4", 2, [5, 10]]})");
  // 1/2 - 3/4 i + 2 i^2 + 1/2 i^3 = -3/2 - 5/4 i
  const Cyclotomic want = Cyclotomic(Rational(-3, 2)) + Cyclotomic::root_of_unity(4, 1).scale(Rational(-5, 4));
  CHECK(cyclotomic_from_json(j) == want);
  CHECK(cyclotomic_from_json(Json(7)) == Cyclotomic(7L));
  CHECK_THROWS_AS(cyclotomic_from_json(Json::parse(R"({"conductor": 0, "coeffs": []})")), FormatError);
  CHECK_THROWS_AS(cyclotomic_from_json(Json::parse(R"({"conductor": 3, "coeffs": [["1","0"]]})")), FormatError);
  CHECK_THROWS_AS(cyclotomic_from_json(Json::parse(R"({"conductor": 3, "coeffs": ["x"]})")), FormatError);
  CHECK_THROWS_AS(cyclotomic_from_json(Json::parse(R"([1, 2])")), FormatError);
}

TEST_CASE("group files") {
  const FiniteGroup s3 = *builtin_group("S3");
  CHECK(group_from_json(Json::parse(to_json(s3).dump())) == s3);
  const auto path = scratch_dir() / "s3.json";
  write(path, to_json(s3));
  CHECK(resolve_group(path.string()) == s3);
  CHECK(resolve_group("Z2xZ4") == *builtin_group("Z2xZ4"));
  CHECK_THROWS_AS(resolve_group("no-such-group"), FormatError);
  CHECK_THROWS_AS(group_from_json(Json::parse(R"({"order": 2, "table": [[0,1]]})")), FormatError);
  CHECK_THROWS_AS(group_from_json(Json::parse(R"({"order": 2, "table": [[0,1],[1,2]]})")), FormatError);
  CHECK_THROWS_AS(group_from_json(Json::parse(R"({"order": 2, "table": [[0,1],[1,1]]})")), GroupAxiomError);
}

TEST_CASE("cocycle files") {
  const Cocycle3 w = omega_t(4, 3);
  const auto dir = scratch_dir();
  write(dir / "w.json", to_json(w, "Z4"));
  CHECK(resolve_cocycle("file:" + (dir / "w.json").string(), FiniteGroup::cyclic(4)) == w);
  // group given as a file relative to the cocycle file
  write(dir / "z4.json", to_json(FiniteGroup::cyclic(4)));
  Json rel = to_json(w, "z4.json");
  write(dir / "w_rel.json", rel);
  CHECK(resolve_cocycle("file:" + (dir / "w_rel.json").string(), FiniteGroup::cyclic(4)) == w);
  // negative exponents are read mod m
  Json neg = to_json(w, "Z4");
  for (auto& e : neg["exponents"])
    if (e.get<long>() != 0) e = e.get<long>() - 16;
  CHECK(cocycle_from_json(neg, FiniteGroup::cyclic(4)) == w);
  CHECK_THROWS_AS(cocycle_from_json(to_json(w, "Z4"), FiniteGroup::cyclic(5)), CochainError);
  CHECK(cocycle_from_json(to_json(w, ""), std::nullopt) == w);
}

TEST_CASE("malformed cocycles are CochainErrors") {
  const FiniteGroup z2 = FiniteGroup::cyclic(2);
  const auto dir = scratch_dir();
  Json bad = {{"group", "Z2"}, {"modulus", 4}, {"exponents", std::vector<int>{0, 0, 0, 0, 0, 0, 0, 1}}};
  write(dir / "bad.json", bad);
  CHECK_THROWS_AS(resolve_cocycle("file:" + (dir / "bad.json").string(), z2), CochainError);
  Json short_table = {{"group", "Z2"}, {"modulus", 2}, {"exponents", std::vector<int>{0, 0, 0}}};
  CHECK_THROWS_AS(cocycle_from_json(short_table, z2), CochainError);
  Json unnormalized = {{"group", "Z2"}, {"modulus", 2}, {"exponents", std::vector<int>{0, 1, 0, 0, 0, 0, 0, 0}}};
  CHECK_THROWS_AS(cocycle_from_json(unnormalized, z2), CochainError);
  CHECK_THROWS_AS(resolve_cocycle("file:" + (dir / "missing.json").string(), z2), CochainError);
  CHECK_THROWS_AS(resolve_cocycle("cyclic:3:1", z2), CochainError);
  CHECK_THROWS_AS(resolve_cocycle("basis:5", z2), CochainError);
  CHECK_THROWS_AS(resolve_cocycle("omega", z2), CochainError);
}

TEST_CASE("cocycle specs") {
  CHECK(resolve_cocycle("cyclic:8:3", FiniteGroup::cyclic(8)) == omega_t(8, 3));
  CHECK(resolve_cocycle("cyclic:8:-5", FiniteGroup::cyclic(8)) == omega_t(8, -5));
  CHECK(resolve_cocycle("trivial", *builtin_group("S3")) == Cocycle3::trivial(*builtin_group("S3")));
  const Cocycle3 b = resolve_cocycle("basis:0", *builtin_group("S3"));
  CHECK(class_order(b) == 6);
}

TEST_CASE("modular data JSON round trip") {
  for (const auto& name : modular_fixture_names()) {
    const ModularData m = modular_fixture(name);
    const ModularData back(modular_data_from_json(Json::parse(to_json(m).dump())));
    CHECK(back.labels() == m.labels());
    CHECK(back.fusion_tensor() == m.fusion_tensor());
    CHECK(back.s_matrix() == m.s_matrix());
    for (std::size_t j = 0; j < m.rank(); ++j) {
      CHECK(back.twist_value(j) == m.twist_value(j));
      CHECK(back.dim(j) == m.dim(j));
    }
  }
  const Json minimal = Json::parse(R"({"rank": 1, "dual": [0], "twists": [{"num": 0, "den": 1}],
                                       "dims": [1], "global_dim": 1, "fusion": [1]})");
  const ModularData trivial(modular_data_from_json(minimal));
  CHECK(bantay_indicator(trivial, 0, 1) == Cyclotomic(1L));
  CHECK_THROWS_AS(modular_data_from_json(Json::parse(R"({"rank": 1})")), FormatError);
}
