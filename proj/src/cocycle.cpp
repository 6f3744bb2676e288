#include "fuscat/cocycle.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>

#include "fuscat/modular_smith.hpp"

namespace fuscat {

namespace {

// Coordinates of normalized cochains: tuples of non-identity elements.
struct NormalizedIndex {
  std::size_t k;  // |G| - 1
  std::size_t two(Element a, Element b) const { return (a - 1) * k + (b - 1); }
  std::size_t three(Element a, Element b, Element c) const { return ((a - 1) * k + (b - 1)) * k + (c - 1); }
};

ModMatrix build_d2(const FiniteGroup& g, std::uint64_t m) {
  const std::uint32_t n = g.order();
  const NormalizedIndex ix{n - 1U};
  ModMatrix d(ix.k * ix.k * ix.k, ix.k * ix.k, m);
  for (Element a = 1; a < n; ++a) {
    for (Element b = 1; b < n; ++b) {
      for (Element c = 1; c < n; ++c) {
        const std::size_t row = ix.three(a, b, c);
        d.add(row, ix.two(b, c), 1);
        if (const Element ab = g.mul(a, b); ab != 0) d.add(row, ix.two(ab, c), -1);
        if (const Element bc = g.mul(b, c); bc != 0) d.add(row, ix.two(a, bc), 1);
        d.add(row, ix.two(a, b), -1);
      }
    }
  }
  return d;
}

ModMatrix build_d3(const FiniteGroup& g, std::uint64_t m) {
  const std::uint32_t n = g.order();
  const NormalizedIndex ix{n - 1U};
  const std::size_t k = ix.k;
  ModMatrix d(k * k * k * k, k * k * k, m);
  std::size_t row = 0;
  for (Element a = 1; a < n; ++a) {
    for (Element b = 1; b < n; ++b) {
      for (Element c = 1; c < n; ++c) {
        for (Element e = 1; e < n; ++e, ++row) {
          d.add(row, ix.three(b, c, e), 1);
          if (const Element ab = g.mul(a, b); ab != 0) d.add(row, ix.three(ab, c, e), -1);
          if (const Element bc = g.mul(b, c); bc != 0) d.add(row, ix.three(a, bc, e), 1);
          if (const Element ce = g.mul(c, e); ce != 0) d.add(row, ix.three(a, b, ce), -1);
          d.add(row, ix.three(a, b, c), 1);
        }
      }
    }
  }
  return d;
}

std::shared_ptr<const ModularSmith> d2_smith(const FiniteGroup& g, std::uint64_t m) {
  using Key = std::pair<std::vector<Element>, std::uint64_t>;
  static std::mutex mu;
  static std::map<Key, std::shared_ptr<const ModularSmith>> cache;
  const auto flat = g.flat_table();
  Key key{std::vector<Element>(flat.begin(), flat.end()), m};
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto smith = std::make_shared<const ModularSmith>(build_d2(g, m));
  std::lock_guard lock(mu);
  return cache.emplace(std::move(key), std::move(smith)).first->second;
}

std::vector<std::uint64_t> normalized_coords(const Cocycle3& omega, std::uint64_t scale, std::uint64_t m) {
  const std::uint32_t n = omega.group().order();
  const NormalizedIndex ix{n - 1U};
  std::vector<std::uint64_t> v(ix.k * ix.k * ix.k);
  for (Element a = 1; a < n; ++a)
    for (Element b = 1; b < n; ++b)
      for (Element c = 1; c < n; ++c) v[ix.three(a, b, c)] = mod_mul(omega.exponent(a, b, c), scale, m);
  return v;
}

std::vector<std::uint64_t> full_table3(std::uint32_t n, std::span<const std::uint64_t> coords) {
  const NormalizedIndex ix{n - 1U};
  std::vector<std::uint64_t> t(std::size_t{n} * n * n, 0);
  for (Element a = 1; a < n; ++a)
    for (Element b = 1; b < n; ++b)
      for (Element c = 1; c < n; ++c) t[(a * n + b) * n + c] = coords[ix.three(a, b, c)];
  return t;
}

void require_cocycle(const Cocycle3& omega, const char* where) {
  if (!check_cocycle(omega)) throw CochainError(std::string(where) + ": table is not a 3-cocycle");
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> ps;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    ps.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

}  // namespace

Cochain2::Cochain2(FiniteGroup group, std::uint64_t modulus, std::vector<std::uint64_t> exponents)
    : group_(std::move(group)), modulus_(modulus), exps_(std::move(exponents)) {
  const std::uint32_t n = group_.order();
  if (modulus_ == 0) throw CochainError("2-cochain modulus must be positive");
  if (exps_.size() != std::size_t{n} * n) throw CochainError("2-cochain table has wrong size");
  for (auto& e : exps_) e %= modulus_;
  for (Element a = 0; a < n; ++a)
    if (exponent(0, a) != 0 || exponent(a, 0) != 0) throw CochainError("2-cochain is not normalized");
}

Cochain2 Cochain2::zero(FiniteGroup group, std::uint64_t modulus) {
  const std::size_t n = group.order();
  return Cochain2(std::move(group), modulus, std::vector<std::uint64_t>(n * n, 0));
}

Cocycle3::Cocycle3(FiniteGroup group, std::uint64_t modulus, std::vector<std::uint64_t> exponents)
    : group_(std::move(group)), modulus_(modulus), exps_(std::move(exponents)) {
  const std::uint32_t n = group_.order();
  if (modulus_ == 0) throw CochainError("3-cochain modulus must be positive");
  if (exps_.size() != std::size_t{n} * n * n) throw CochainError("3-cochain table has wrong size");
  for (auto& e : exps_) e %= modulus_;
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (exponent(0, a, b) != 0 || exponent(a, 0, b) != 0 || exponent(a, b, 0) != 0)
        throw CochainError("3-cochain is not normalized at (" + std::to_string(a) + ", " + std::to_string(b) + ")");
    }
  }
}

Cocycle3 Cocycle3::trivial(FiniteGroup group, std::uint64_t modulus) {
  const std::size_t n = group.order();
  return Cocycle3(std::move(group), modulus, std::vector<std::uint64_t>(n * n * n, 0));
}

Cyclotomic Cocycle3::value(Element a, Element b, Element c) const {
  return Cyclotomic::root_of_unity(modulus_, static_cast<std::int64_t>(exponent(a, b, c)));
}

Cocycle3 Cocycle3::with_modulus(std::uint64_t modulus) const {
  if (modulus % modulus_ != 0) throw CochainError("with_modulus: new modulus must be a multiple");
  const std::uint64_t scale = modulus / modulus_;
  std::vector<std::uint64_t> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = exps_[i] * scale;
  return Cocycle3(group_, modulus, std::move(e));
}

Cocycle3 Cocycle3::power(std::int64_t k) const {
  const std::uint64_t kk = mod_reduce(k, modulus_);
  std::vector<std::uint64_t> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = mod_mul(exps_[i], kk, modulus_);
  return Cocycle3(group_, modulus_, std::move(e));
}

bool operator==(const Cocycle3& a, const Cocycle3& b) {
  return a.group_ == b.group_ && a.modulus_ == b.modulus_ && a.exps_ == b.exps_;
}

Cocycle3 omega_t(std::uint32_t n, std::int64_t t) {
  if (n == 0) throw std::invalid_argument("omega_t: N must be positive");
  const std::uint64_t m = std::uint64_t{n} * n;
  const std::uint64_t tt = mod_reduce(t, m);
  std::vector<std::uint64_t> e(std::size_t{n} * n * n, 0);
  for (std::uint64_t l = 0; l < n; ++l) {
    for (std::uint64_t a = 0; a < n; ++a) {
      for (std::uint64_t b = 0; b < n; ++b) {
        // a + b - <a + b> is 0 or N, so the division is exact.
        const std::uint64_t carry = (a + b - (a + b) % n) / n;
        e[(l * n + a) * n + b] = mod_mul(tt, l * carry * n, m);
      }
    }
  }
  return Cocycle3(FiniteGroup::cyclic(n), m, std::move(e));
}

bool check_cocycle(const Cocycle3& omega) {
  const FiniteGroup& g = omega.group();
  const std::uint32_t n = g.order();
  const std::uint64_t m = omega.modulus();
  for (Element a = 1; a < n; ++a) {
    for (Element b = 1; b < n; ++b) {
      const Element ab = g.mul(a, b);
      for (Element c = 1; c < n; ++c) {
        const Element bc = g.mul(b, c);
        const std::uint64_t abc = omega.exponent(a, b, c);
        for (Element d = 1; d < n; ++d) {
          const std::uint64_t lhs = omega.exponent(b, c, d) + omega.exponent(a, bc, d) + abc;
          const std::uint64_t rhs = omega.exponent(ab, c, d) + omega.exponent(a, b, g.mul(c, d));
          if (lhs % m != rhs % m) return false;
        }
      }
    }
  }
  return true;
}

Cocycle3 coboundary(const Cochain2& beta) {
  const FiniteGroup& g = beta.group();
  const std::uint32_t n = g.order();
  const std::uint64_t m = beta.modulus();
  std::vector<std::uint64_t> e(std::size_t{n} * n * n, 0);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      for (Element c = 0; c < n; ++c) {
        const std::uint64_t plus = beta.exponent(b, c) + beta.exponent(a, g.mul(b, c));
        const std::uint64_t minus = beta.exponent(g.mul(a, b), c) + beta.exponent(a, b);
        e[(a * n + b) * n + c] = (plus + 2 * m - minus) % m;
      }
    }
  }
  return Cocycle3(g, m, std::move(e));
}

Cochain2 coboundary1(const FiniteGroup& group, std::uint64_t modulus, std::span<const std::uint64_t> alpha) {
  const std::uint32_t n = group.order();
  if (alpha.size() != n) throw CochainError("1-cochain has wrong size");
  if (alpha[0] % modulus != 0) throw CochainError("1-cochain is not normalized");
  std::vector<std::uint64_t> e(std::size_t{n} * n, 0);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      e[a * n + b] = (alpha[b] % modulus + alpha[a] % modulus + modulus - alpha[group.mul(a, b)] % modulus) % modulus;
  return Cochain2(group, modulus, std::move(e));
}

bool check_cocycle2(const Cochain2& beta) {
  const FiniteGroup& g = beta.group();
  const std::uint32_t n = g.order();
  const std::uint64_t m = beta.modulus();
  for (Element a = 1; a < n; ++a)
    for (Element b = 1; b < n; ++b)
      for (Element c = 1; c < n; ++c)
        if ((beta.exponent(b, c) + beta.exponent(a, g.mul(b, c))) % m !=
            (beta.exponent(g.mul(a, b), c) + beta.exponent(a, b)) % m)
          return false;
  return true;
}

Cocycle3 multiply(const Cocycle3& a, const Cocycle3& b) {
  if (!(a.group() == b.group())) throw CochainError("multiply: cocycles live on different groups");
  const std::uint64_t m = std::lcm(a.modulus(), b.modulus());
  const Cocycle3 la = a.with_modulus(m), lb = b.with_modulus(m);
  std::vector<std::uint64_t> e(la.exponents().size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = (la.exponents()[i] + lb.exponents()[i]) % m;
  return Cocycle3(a.group(), m, std::move(e));
}

Cocycle3 external_product(const Cocycle3& a, const Cocycle3& b) {
  const FiniteGroup prod = FiniteGroup::direct_product(a.group(), b.group());
  const std::uint64_t m = std::lcm(a.modulus(), b.modulus());
  const Cocycle3 la = a.with_modulus(m), lb = b.with_modulus(m);
  const std::uint32_t n = prod.order(), q = b.group().order();
  std::vector<std::uint64_t> e(std::size_t{n} * n * n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        e[(x * n + y) * n + z] = (la.exponent(x / q, y / q, z / q) + lb.exponent(x % q, y % q, z % q)) % m;
  return Cocycle3(prod, m, std::move(e));
}

std::optional<Cochain2> is_coboundary(const Cocycle3& omega) {
  require_cocycle(omega, "is_coboundary");
  const FiniteGroup& g = omega.group();
  const std::uint32_t n = g.order();
  const std::uint64_t big = omega.modulus() * n;
  if (n == 1) return Cochain2::zero(g, big);
  const auto smith = d2_smith(g, big);
  const auto rhs = normalized_coords(omega, n, big);
  const auto x = smith->solve(rhs);
  if (!x) return std::nullopt;
  const NormalizedIndex ix{n - 1U};
  std::vector<std::uint64_t> table(std::size_t{n} * n, 0);
  for (Element a = 1; a < n; ++a)
    for (Element b = 1; b < n; ++b) table[a * n + b] = (*x)[ix.two(a, b)];
  Cochain2 beta(g, big, std::move(table));
  if (!(coboundary(beta) == omega.with_modulus(big)))
    throw std::logic_error("is_coboundary: witness failed verification");
  return beta;
}

std::uint64_t class_order(const Cocycle3& omega) {
  require_cocycle(omega, "class_order");
  const FiniteGroup& g = omega.group();
  const std::uint32_t n = g.order();
  if (n == 1) return 1;
  const std::uint64_t big = omega.modulus() * n;
  const auto smith = d2_smith(g, big);
  auto w = normalized_coords(omega, n, big);
  smith->apply_row_transform(w);
  // k * w must land in the image, i.e. row_image_gcd(i) | k * w_i for every row.
  std::uint64_t order = 1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const std::uint64_t gi = smith->row_image_gcd(i);
    order = std::lcm(order, gi / std::gcd(w[i] % gi, gi));
  }
  return order;
}

Cocycle3 restrict(const Cocycle3& omega, const Subgroup& sub) {
  if (!(sub.parent() == omega.group())) throw CochainError("restrict: subgroup of a different group");
  const auto& el = sub.elements();
  const std::size_t k = el.size();
  std::vector<std::uint64_t> e(k * k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l) e[(i * k + j) * k + l] = omega.exponent(el[i], el[j], el[l]);
  return Cocycle3(sub.as_group(), omega.modulus(), std::move(e));
}

Cocycle3 transport(const Cocycle3& omega, const FiniteGroup& target, std::span<const Element> iso) {
  if (!omega.group().is_isomorphism(target, iso)) throw GroupAxiomError("transport: map is not a group isomorphism");
  const std::uint32_t n = target.order();
  std::vector<std::uint64_t> e(std::size_t{n} * n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c) e[(iso[a] * n + iso[b]) * n + iso[c]] = omega.exponent(a, b, c);
  return Cocycle3(target, omega.modulus(), std::move(e));
}

Cyclotomic eps_invariant(const Cocycle3& omega, Element g) {
  const FiniteGroup& grp = omega.group();
  std::uint64_t sum = 0;
  Element x = FiniteGroup::identity();
  for (std::uint32_t k = 0; k < grp.element_order(g); ++k) {
    sum = (sum + omega.exponent(g, x, g)) % omega.modulus();
    x = grp.mul(x, g);
  }
  return Cyclotomic::root_of_unity(omega.modulus(), static_cast<std::int64_t>(sum));
}

std::uint64_t dpr_theta_exponent(const Cocycle3& omega, Element g, Element x, Element y) {
  const FiniteGroup& grp = omega.group();
  if (!grp.commute(g, x) || !grp.commute(g, y))
    throw std::invalid_argument("dpr_theta: arguments must centralize g");
  const std::uint64_t m = omega.modulus();
  return (omega.exponent(g, x, y) + omega.exponent(x, y, g) + m - omega.exponent(x, g, y)) % m;
}

Cyclotomic dpr_theta(const Cocycle3& omega, Element g, Element x, Element y) {
  return Cyclotomic::root_of_unity(omega.modulus(), static_cast<std::int64_t>(dpr_theta_exponent(omega, g, x, y)));
}

CohomologyBasis cohomology_basis(const FiniteGroup& group, std::uint64_t modulus, std::size_t max_entries) {
  if (modulus == 0) throw std::invalid_argument("cohomology_basis: modulus must be positive");
  CohomologyBasis out;
  out.modulus = modulus;
  const std::uint32_t n = group.order();
  if (n == 1 || modulus == 1) return out;
  const std::size_t k = n - 1U;
  const std::size_t c3 = k * k * k;
  if (c3 * k * c3 > max_entries)
    throw ResourceLimitError("cohomology_basis: coboundary matrix for |G| = " + std::to_string(n) +
                             " exceeds the configured size limit");

  const auto d2 = d2_smith(group, modulus);
  const ModularSmith d3(build_d3(group, modulus));
  const auto cocycles = d3.kernel_generators();

  // Image of each cocycle in Z^3 / B^3, embedded into (Z/m)^rows via m / g_i.
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < c3; ++i)
    if (d2->row_image_gcd(i) > 1) rows.push_back(i);
  ModMatrix image(rows.size(), cocycles.size(), modulus);
  for (std::size_t j = 0; j < cocycles.size(); ++j) {
    auto v = cocycles[j];
    d2->apply_row_transform(v);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const std::uint64_t gi = d2->row_image_gcd(rows[r]);
      image(r, j) = mod_mul(v[rows[r]] % gi, modulus / gi, modulus);
    }
  }
  const ModularSmith quotient(std::move(image));

  struct Component {
    std::vector<std::uint64_t> coords;
    std::uint64_t order;
  };
  std::vector<Component> cyclic;
  for (std::size_t j = 0; j < quotient.diagonal().size(); ++j) {
    const std::uint64_t ord = modulus / std::gcd(quotient.diagonal()[j], modulus);
    if (ord == 1) continue;
    std::vector<std::uint64_t> coeff(cocycles.size(), 0);
    coeff[j] = 1;
    quotient.apply_column_transform(coeff);
    std::vector<std::uint64_t> z(c3, 0);
    for (std::size_t s = 0; s < cocycles.size(); ++s) {
      if (coeff[s] == 0) continue;
      for (std::size_t i = 0; i < c3; ++i) z[i] = (z[i] + mod_mul(coeff[s], cocycles[s][i], modulus)) % modulus;
    }
    cyclic.push_back({std::move(z), ord});
  }

  // Regroup the cyclic summands into invariant factors via their primary parts.
  std::map<std::uint64_t, std::vector<Component>> primary;
  for (const auto& comp : cyclic) {
    for (auto p : prime_factors(comp.order)) {
      std::uint64_t pa = 1;
      while (comp.order % (pa * p) == 0) pa *= p;
      Component part{comp.coords, pa};
      const std::uint64_t scale = comp.order / pa;
      for (auto& x : part.coords) x = mod_mul(x, scale, modulus);
      primary[p].push_back(std::move(part));
    }
  }
  std::size_t count = 0;
  for (auto& [p, parts] : primary) {
    std::stable_sort(parts.begin(), parts.end(), [](const Component& a, const Component& b) { return a.order > b.order; });
    count = std::max(count, parts.size());
  }
  std::vector<Component> factors(count, Component{std::vector<std::uint64_t>(c3, 0), 1});
  for (auto& [p, parts] : primary) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      factors[i].order *= parts[i].order;
      for (std::size_t x = 0; x < c3; ++x) factors[i].coords[x] = (factors[i].coords[x] + parts[i].coords[x]) % modulus;
    }
  }
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    out.invariant_factors.push_back(it->order);
    Cocycle3 rep(group, modulus, full_table3(n, it->coords));
    if (!check_cocycle(rep)) throw std::logic_error("cohomology_basis: representative is not a cocycle");
    out.representatives.push_back(std::move(rep));
  }
  return out;
}

}  // namespace fuscat
