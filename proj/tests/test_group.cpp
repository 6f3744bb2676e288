#include <doctest.h>

#include <numeric>

#include "fuscat/group.hpp"

using fuscat::Element;
using fuscat::FiniteGroup;
using fuscat::GroupAxiomError;
using fuscat::Subgroup;

namespace {

FiniteGroup named(const std::string& n) { return *fuscat::builtin_group(n); }

}  // namespace

TEST_CASE("builtin groups have the expected invariants") {
  struct Row {
    const char* name;
    std::uint32_t order;
    std::uint64_t exponent;
    bool abelian;
    std::size_t classes;
  };
  const Row rows[] = {
      {"Z1", 1, 1, true, 1},      {"Z6", 6, 6, true, 6},       {"Z2xZ2", 4, 2, true, 4},
      {"Z2xZ4", 8, 4, true, 8},   {"S3", 6, 6, false, 3},      {"D4", 8, 4, false, 5},
      {"D5", 10, 10, false, 4},   {"S4", 24, 12, false, 5},
  };
  for (const auto& r : rows) {
    CAPTURE(r.name);
    const FiniteGroup g = named(r.name);
    CHECK(g.order() == r.order);
    CHECK(g.exponent() == r.exponent);
    CHECK(g.is_abelian() == r.abelian);
    CHECK(g.conjugacy_class_count() == r.classes);
    // |{(g,h) : gh = hg}| = |G| * k(G)
    CHECK(g.commuting_pairs().size() == r.order * r.classes);
  }
  CHECK(!fuscat::builtin_group("Q8"));
  CHECK(!fuscat::builtin_group("S5"));
}

TEST_CASE("cyclic group arithmetic") {
  const FiniteGroup z = FiniteGroup::cyclic(12);
  CHECK(z.mul(7, 9) == 4);
  CHECK(z.inverse(5) == 7);
  CHECK(z.power(5, 3) == 3);
  CHECK(z.power(5, -1) == 7);
  CHECK(z.element_order(8) == 3);
  CHECK(z.element_order(0) == 1);
}

TEST_CASE("direct product indexing") {
  const FiniteGroup g = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(4));
  // (a, b) has index a * 4 + b
  CHECK(g.mul(1 * 4 + 3, 1 * 4 + 2) == 0 * 4 + 1);
  CHECK(g.element_order(1 * 4 + 1) == 4);
  CHECK(g == named("Z2xZ4"));
}

TEST_CASE("dihedral relations") {
  const FiniteGroup d = FiniteGroup::dihedral(5);
  const Element r = 1, s = 5;
  CHECK(d.element_order(r) == 5);
  CHECK(d.element_order(s) == 2);
  // s r s = r^-1
  CHECK(d.mul(d.mul(s, r), s) == d.inverse(r));
}

TEST_CASE("subgroups") {
  const FiniteGroup s3 = named("S3");
  CHECK(s3.maximal_cyclic_subgroups().size() == 4);
  CHECK(s3.cyclic_subgroups().size() == 5);
  const FiniteGroup v = named("Z2xZ2");
  CHECK(v.maximal_cyclic_subgroups().size() == 3);
  const FiniteGroup z = FiniteGroup::cyclic(12);
  CHECK(z.maximal_cyclic_subgroups().size() == 1);
  CHECK(z.cyclic_subgroups().size() == 6);
  CHECK(s3.centralizer(0).order() == 6);
  for (Element g = 1; g < 6; ++g) CHECK(s3.centralizer(g).order() == s3.element_order(g));
  const Subgroup c = z.cyclic_subgroup(4);
  CHECK(c.order() == 3);
  CHECK(c.contains(8));
  CHECK(!c.contains(2));
  const FiniteGroup cg = c.as_group();
  CHECK(cg.order() == 3);
  CHECK(cg.exponent() == 3);
  CHECK_THROWS_AS(Subgroup(z, {0, 1}), GroupAxiomError);
  CHECK_THROWS_AS(Subgroup(z, {1, 11}), GroupAxiomError);
}

TEST_CASE("isomorphisms") {
  const FiniteGroup z6 = FiniteGroup::cyclic(6);
  const FiniteGroup z2z3 = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(3));
  std::vector<Element> f(6);
  for (Element k = 0; k < 6; ++k) f[k] = (k % 2) * 3 + (k % 3);
  CHECK(z6.is_isomorphism(z2z3, f));
  std::vector<Element> bad(6, 0);
  CHECK(!z6.is_isomorphism(z2z3, bad));
  CHECK(!named("S3").is_isomorphism(z6, std::vector<Element>{0, 1, 2, 3, 4, 5}));
}

TEST_CASE("from_table validation") {
  CHECK_NOTHROW(FiniteGroup::from_table({{0, 1}, {1, 0}}));
  CHECK_THROWS_AS(FiniteGroup::from_table({}), GroupAxiomError);
  CHECK_THROWS_AS(FiniteGroup::from_table({{1, 0}, {0, 1}}), GroupAxiomError);
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 2}}), GroupAxiomError);
  // A Latin square with identity 0 that is not associative (the smallest loop of order 5).
  const std::vector<std::vector<Element>> loop = {
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  try {
    FiniteGroup::from_table(loop);
    FAIL("expected an associativity failure");
  } catch (const GroupAxiomError& e) {
    CHECK(std::string(e.what()).find("associativity") != std::string::npos);
  }
}

TEST_CASE("table round trip") {
  const FiniteGroup s4 = named("S4");
  CHECK(FiniteGroup::from_table(s4.table()) == s4);
}
