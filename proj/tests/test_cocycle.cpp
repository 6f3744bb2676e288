#include <doctest.h>

#include <numeric>
#include <random>

#include "fuscat/cocycle.hpp"

using namespace fuscat;

namespace {

Cochain2 random_cochain(const FiniteGroup& g, std::uint64_t m, std::mt19937_64& rng) {
  const std::size_t n = g.order();
  std::vector<std::uint64_t> e(n * n, 0);
  for (std::size_t a = 1; a < n; ++a)
    for (std::size_t b = 1; b < n; ++b) e[a * n + b] = rng() % m;
  return Cochain2(g, m, std::move(e));
}

bool cohomologous(const Cocycle3& a, const Cocycle3& b) {
  return is_coboundary(multiply(a, b.power(-1))).has_value();
}

}  // namespace

TEST_CASE("omega_t is a normalized cocycle of the stated order") {
  for (std::uint32_t n = 1; n <= 12; ++n) {
    for (std::uint32_t t = 0; t < n; ++t) {
      CAPTURE(n);
      CAPTURE(t);
      const Cocycle3 w = omega_t(n, t);
      CHECK(w.modulus() == std::uint64_t{n} * n);
      CHECK(check_cocycle(w));
      CHECK(class_order(w) == n / std::gcd(n, t));
    }
  }
}

TEST_CASE("omega_t on Z/2") {
  const Cocycle3 w = omega_t(2, 1);
  // omega(1,1,1) = -1, every other value 1
  CHECK(w.value(1, 1, 1) == Cyclotomic(-1L));
  CHECK(w.value(1, 1, 0) == Cyclotomic(1L));
  CHECK(w.value(0, 1, 1) == Cyclotomic(1L));
}

TEST_CASE("a perturbed table is not a cocycle") {
  Cocycle3 w = Cocycle3::trivial(FiniteGroup::cyclic(2), 4);
  CHECK(check_cocycle(w));
  std::vector<std::uint64_t> e = w.exponents();
  e[(1 * 2 + 1) * 2 + 1] = 1;  // omega(1,1,1) = i
  CHECK(!check_cocycle(Cocycle3(w.group(), 4, e)));
}

TEST_CASE("construction rejects malformed tables") {
  const FiniteGroup z3 = FiniteGroup::cyclic(3);
  CHECK_THROWS_AS(Cocycle3(z3, 3, std::vector<std::uint64_t>(26, 0)), CochainError);
  std::vector<std::uint64_t> e(27, 0);
  e[(0 * 3 + 1) * 3 + 2] = 1;  // identity in the first slot
  CHECK_THROWS_AS(Cocycle3(z3, 3, e), CochainError);
  std::vector<std::uint64_t> big(27, 0);
  big[(1 * 3 + 1) * 3 + 1] = 3;  // exponents are read mod m
  CHECK(Cocycle3(z3, 3, big) == Cocycle3::trivial(z3, 3));
  std::vector<std::uint64_t> wrapped(27, 0);
  wrapped[(1 * 3 + 1) * 3] = 3;  // a multiple of m in a normalized slot is still zero
  CHECK(Cocycle3(z3, 3, wrapped) == Cocycle3::trivial(z3, 3));
  CHECK_THROWS_AS(Cocycle3(z3, 0, std::vector<std::uint64_t>(27, 0)), CochainError);
  CHECK_THROWS_AS(Cochain2(z3, 3, std::vector<std::uint64_t>(8, 0)), CochainError);
}

TEST_CASE("coboundaries are cocycles and are detected with a witness") {
  std::mt19937_64 rng(17);
  for (const char* name : {"Z4", "Z2xZ2", "S3", "Z6"}) {
    CAPTURE(name);
    const FiniteGroup g = *builtin_group(name);
    const Cochain2 beta = random_cochain(g, 12, rng);
    const Cocycle3 db = coboundary(beta);
    CHECK(check_cocycle(db));
    const auto w = is_coboundary(db);
    REQUIRE(w.has_value());
    CHECK(coboundary(*w).with_modulus(w->modulus()) == db.with_modulus(w->modulus()));
    CHECK(class_order(db) == 1);
  }
}

TEST_CASE("is_coboundary works over C^x, not just Z/m") {
  // 2 * omega_1 on Z/2 is trivial in H^3(Z/2, C^x); with modulus 4 the
  // primitive needs values of order 8.
  const Cocycle3 w = omega_t(2, 2);
  const auto beta = is_coboundary(w);
  REQUIRE(beta.has_value());
  CHECK(coboundary(*beta) == w.with_modulus(beta->modulus()));
  CHECK(!is_coboundary(omega_t(2, 1)));
}

TEST_CASE("omega_t depends on t modulo N only up to coboundaries") {
  for (std::uint32_t n : {3u, 4u, 6u}) {
    CHECK(cohomologous(omega_t(n, 1 + n), omega_t(n, 1)));
    CHECK(cohomologous(omega_t(n, -1), omega_t(n, n - 1)));
    CHECK(!cohomologous(omega_t(n, 1), omega_t(n, 2)));
  }
}

TEST_CASE("coboundary1 lands in the 2-cocycles") {
  const FiniteGroup g = *builtin_group("S3");
  std::vector<std::uint64_t> alpha = {0, 1, 2, 3, 4, 5};
  const Cochain2 d = coboundary1(g, 6, alpha);
  CHECK(check_cocycle2(d));
  CHECK(coboundary(d) == Cocycle3::trivial(g, 6));
}

TEST_CASE("restriction and eps invariant") {
  const Cocycle3 w = omega_t(6, 4);
  const FiniteGroup& g = w.group();
  const Subgroup sub = g.cyclic_subgroup(2);
  const Cocycle3 r = restrict(w, sub);
  CHECK(check_cocycle(r));
  CHECK(r.group().order() == 3);
  const auto ord = eps_invariant(w, 2).order_as_root_of_unity();
  REQUIRE(ord.has_value());
  CHECK(*ord == class_order(r));
  CHECK(*ord == 3 / std::gcd(3, 4));
}

TEST_CASE("eps invariant agrees with the Smith class order for every omega_t, N <= 12") {
  for (std::uint32_t n = 1; n <= 12; ++n)
    for (std::uint32_t t = 0; t < n; ++t) {
      const Cocycle3 w = omega_t(n, t);
      const auto e = eps_invariant(w, n == 1 ? 0 : 1).order_as_root_of_unity();
      REQUIRE(e.has_value());
      CHECK(*e == class_order(w));
    }
}

TEST_CASE("transport along an isomorphism") {
  const Cocycle3 w = omega_t(6, 1);
  const FiniteGroup z2z3 = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(3));
  std::vector<Element> f(6);
  for (Element k = 0; k < 6; ++k) f[k] = (k % 2) * 3 + (k % 3);
  const Cocycle3 moved = transport(w, z2z3, f);
  CHECK(check_cocycle(moved));
  CHECK(class_order(moved) == 6);
  std::vector<Element> id = {0, 1, 2, 3, 4, 5};
  CHECK(transport(w, w.group(), id) == w);
  CHECK_THROWS(transport(w, z2z3, id));
}

TEST_CASE("products of cocycles") {
  const Cocycle3 a = omega_t(4, 1), b = omega_t(4, 2);
  CHECK(class_order(multiply(a, b)) == 4);
  CHECK(class_order(multiply(a, a.power(3))) == 1);
  const Cocycle3 ext = external_product(omega_t(2, 1), omega_t(3, 1));
  CHECK(check_cocycle(ext));
  CHECK(ext.group().order() == 6);
  CHECK(class_order(ext) == 6);
}

TEST_CASE("theta is defined only on the centralizer") {
  const FiniteGroup s3 = *builtin_group("S3");
  const Cocycle3 w = Cocycle3::trivial(s3);
  // Find a non-commuting pair.
  Element x = 0, y = 0;
  for (Element a = 1; a < 6 && !x; ++a)
    for (Element b = 1; b < 6; ++b)
      if (!s3.commute(a, b)) {
        x = a;
        y = b;
        break;
      }
  CHECK_THROWS(dpr_theta(w, x, y, 0));
  CHECK(dpr_theta(w, x, x, x) == Cyclotomic(1L));
}

TEST_CASE("cohomology with Z/m coefficients of cyclic groups") {
  // H^3(Z/n; Z/m) = Z/gcd(n, m)
  const std::pair<std::uint32_t, std::uint64_t> cases[] = {{6, 4}, {4, 6}, {5, 3}, {8, 8}, {9, 3}, {1, 5}};
  for (auto [n, m] : cases) {
    CAPTURE(n);
    CAPTURE(m);
    const CohomologyBasis b = cohomology_basis(FiniteGroup::cyclic(n), m);
    const std::uint64_t gcd = std::gcd<std::uint64_t>(n, m);
    if (gcd == 1) {
      CHECK(b.invariant_factors.empty());
    } else {
      CHECK(b.invariant_factors == std::vector<std::uint64_t>{gcd});
    }
    for (const auto& r : b.representatives) CHECK(check_cocycle(r));
  }
}

TEST_CASE("cohomology of small non-cyclic groups") {
  // Over F_2, H^*(Z/2 x Z/2) has Poincare series 1/(1-x)^2, so degree 3 has rank 4.
  CHECK(cohomology_basis(*builtin_group("Z2xZ2"), 2).invariant_factors == std::vector<std::uint64_t>{2, 2, 2, 2});
  // H^3(Z2 x Z2, C^x) = (Z/2)^3: the generators of H^3(.; Z/4) realize exactly that image.
  const CohomologyBasis v = cohomology_basis(*builtin_group("Z2xZ2"), 4);
  std::vector<std::uint64_t> orders;
  for (const auto& r : v.representatives) orders.push_back(class_order(r));
  CHECK(std::count(orders.begin(), orders.end(), 2) >= 3);
  // H^3(S3, C^x) = Z/6.
  const CohomologyBasis s = cohomology_basis(*builtin_group("S3"), 6);
  REQUIRE(s.representatives.size() == 1);
  CHECK(s.invariant_factors.front() == 6);
  CHECK(class_order(s.representatives.front()) == 6);
}

TEST_CASE("basis representatives of Z/N are generators of H^3") {
  for (std::uint32_t n = 2; n <= 8; ++n) {
    CAPTURE(n);
    const CohomologyBasis b = cohomology_basis(FiniteGroup::cyclic(n), n);
    REQUIRE(b.representatives.size() == 1);
    const Cocycle3& r = b.representatives.front();
    CHECK(class_order(r) == n);
    bool found = false;
    for (std::uint32_t t = 1; t < n && !found; ++t)
      if (std::gcd(t, n) == 1 && cohomologous(r, omega_t(n, t))) found = true;
    CHECK(found);
  }
}

TEST_CASE("cohomology_basis respects the size guard") {
  CHECK_THROWS_AS(cohomology_basis(*builtin_group("S4"), 24, 1000), ResourceLimitError);
}
