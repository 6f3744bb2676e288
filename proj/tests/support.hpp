#pragma once

#include <map>
#include <string>
#include <vector>

#include "fuscat/cocycle.hpp"
#include "fuscat/pointed.hpp"

namespace fuscat::testing {

struct NamedCocycle {
  std::string label;
  Cocycle3 omega;
};

/// Z2..Z8, Z2xZ2, Z2xZ4 and S3, each with the trivial cocycle and the
/// generators of H^3(G; Z/|G|).
inline const std::vector<NamedCocycle>& reference_categories() {
  static const std::vector<NamedCocycle> all = [] {
    std::vector<NamedCocycle> out;
    for (const char* name : {"Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "Z2xZ2", "Z2xZ4", "S3"}) {
      const FiniteGroup g = *builtin_group(name);
      out.push_back({std::string(name) + "/trivial", Cocycle3::trivial(g)});
      const CohomologyBasis b = cohomology_basis(g, g.order());
      for (std::size_t i = 0; i < b.representatives.size(); ++i)
        out.push_back({std::string(name) + "/basis:" + std::to_string(i), b.representatives[i]});
    }
    return out;
  }();
  return all;
}

/// nu_n(V_g) by following the Frobenius-Schur endomorphism one tensor factor
/// at a time: the first step contributes omega(g, g^-1, g) from ev and the
/// pivotal structure, each further step one associator omega(g, g^(k-2), g).
inline Cyclotomic indicator_by_recursion(const Cocycle3& w, Element g, std::uint64_t n) {
  const FiniteGroup& grp = w.group();
  if (n == 0 || grp.power(g, static_cast<std::int64_t>(n)) != FiniteGroup::identity()) return Cyclotomic(0L);
  Cyclotomic value = w.value(g, grp.inverse(g), g);
  for (std::uint64_t k = 2; k <= n; ++k) value *= w.value(g, grp.power(g, static_cast<std::int64_t>(k - 2)), g);
  return value;
}

/// nu_n(V_g) through cohomology: transport omega restricted to <g> to Z/d,
/// find t with [omega] = [omega_t], and use nu_{ld} = zeta_d^{tl}.
inline Cyclotomic indicator_by_class(const Cocycle3& w, Element g, std::uint64_t n) {
  const FiniteGroup& grp = w.group();
  const std::uint32_t d = grp.element_order(g);
  if (n == 0 || n % d != 0) return Cyclotomic(0L);
  const Subgroup sub = grp.cyclic_subgroup(g);
  std::vector<Element> log(sub.order());
  Element x = FiniteGroup::identity();
  for (std::uint32_t k = 0; k < d; ++k) {
    const auto pos = std::lower_bound(sub.elements().begin(), sub.elements().end(), x) - sub.elements().begin();
    log[static_cast<std::size_t>(pos)] = k;
    x = grp.mul(x, g);
  }
  const Cocycle3 on_zd = transport(restrict(w, sub), FiniteGroup::cyclic(d), log);
  for (std::uint32_t t = 0; t < d; ++t) {
    if (is_coboundary(multiply(on_zd, omega_t(d, t).power(-1))))
      return Cyclotomic::root_of_unity(d, static_cast<std::int64_t>(t * (n / d) % d));
  }
  throw std::logic_error("no omega_t is cohomologous to the restriction");
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> ps;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    ps.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

}  // namespace fuscat::testing
