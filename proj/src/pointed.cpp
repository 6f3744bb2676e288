#include "fuscat/pointed.hpp"

#include <numeric>

namespace fuscat {

PointedCategory::PointedCategory(Cocycle3 omega) : omega_(std::move(omega)) {
  if (!check_cocycle(omega_)) throw CochainError("PointedCategory: associator table is not a 3-cocycle");
}

SimpleObject PointedCategory::simple(Element g) const {
  const Element gi = group().inverse(g);
  return SimpleObject{g, gi, Cyclotomic(1L), omega_.value(g, gi, g).conj(), omega_.value(gi, g, gi)};
}

bool SimpleObject::zigzag_consistent(const PointedCategory& c) const {
  const Cyclotomic phi = c.omega().value(g, dual, g);
  return (phi * ev).is_one() && pivotal == ev;
}

Cyclotomic indicator(const PointedCategory& c, Element g, std::uint64_t n) {
  const FiniteGroup& grp = c.group();
  const std::uint64_t ord = grp.element_order(g);
  if (n == 0 || n % ord != 0) return Cyclotomic(0L);
  // The product is periodic in j with period ord(g).
  const Cocycle3& w = c.omega();
  const std::uint64_t m = w.modulus();
  std::uint64_t period_sum = 0;
  Element x = FiniteGroup::identity();
  for (std::uint64_t j = 0; j < ord; ++j) {
    period_sum = (period_sum + w.exponent(g, x, g)) % m;
    x = grp.mul(x, g);
  }
  const std::uint64_t total = static_cast<std::uint64_t>((static_cast<unsigned __int128>(period_sum) * (n / ord)) % m);
  return Cyclotomic::root_of_unity(m, static_cast<std::int64_t>(total));
}

Cyclotomic higher_indicator(const PointedCategory& c, Element g, std::uint64_t n, std::uint64_t r) {
  return indicator(c, g, n).pow(r);
}

std::uint64_t fs_exponent_object(const PointedCategory& c, Element g) {
  const Subgroup cyc = c.group().cyclic_subgroup(g);
  return c.group().element_order(g) * class_order(restrict(c.omega(), cyc));
}

std::uint64_t fs_exponent_category(const PointedCategory& c) {
  std::uint64_t e = 1;
  for (const auto& sub : c.group().maximal_cyclic_subgroups())
    e = std::lcm(e, sub.order() * class_order(restrict(c.omega(), sub)));
  return e;
}

std::vector<std::vector<Cyclotomic>> indicator_table(const PointedCategory& c, std::uint64_t n_max) {
  std::vector<std::vector<Cyclotomic>> rows(c.rank());
  for (Element g = 0; g < c.rank(); ++g) {
    rows[g].reserve(n_max);
    for (std::uint64_t n = 1; n <= n_max; ++n) rows[g].push_back(indicator(c, g, n));
  }
  return rows;
}

std::uint64_t unit_multiplicity_of_regular_power(const FiniteGroup& g, std::uint32_t p) {
  std::vector<std::uint64_t> v(g.order(), 1);
  for (std::uint32_t step = 1; step < p; ++step) {
    std::vector<std::uint64_t> next(g.order(), 0);
    for (Element a = 0; a < g.order(); ++a)
      for (Element b = 0; b < g.order(); ++b) next[g.mul(a, b)] += v[a];
    v = std::move(next);
  }
  return p == 0 ? 1 : v[FiniteGroup::identity()];
}

}  // namespace fuscat
