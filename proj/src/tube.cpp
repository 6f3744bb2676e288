#include "fuscat/tube.hpp"

#include <algorithm>
#include <sstream>
#include <string>

namespace fuscat {

namespace {

std::string pair_name(const std::pair<Element, Element>& p) {
  std::ostringstream os;
  os << "b(" << p.first << ',' << p.second << ')';
  return os.str();
}

}  // namespace

TubeAlgebra TubeAlgebra::build(const PointedCategory& c) {
  TubeAlgebra a(c);
  const FiniteGroup& grp = c.group();
  const Cocycle3& w = c.omega();
  const std::uint64_t m = w.modulus();

  a.basis_ = grp.commuting_pairs();
  a.block_of_.resize(a.basis_.size());
  std::size_t offset = 0;
  for (Element g = 0; g < grp.order(); ++g) {
    Block blk;
    blk.g = g;
    blk.offset = offset;
    blk.centralizer = grp.centralizer(g).elements();
    const std::size_t k = blk.centralizer.size();
    blk.table.resize(k * k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        const Element x = blk.centralizer[i], y = blk.centralizer[j];
        const Element prod = grp.mul(y, x);
        const auto pos = std::lower_bound(blk.centralizer.begin(), blk.centralizer.end(), prod) - blk.centralizer.begin();
        // conj(theta_g(y, x))
        const std::uint64_t e = (m - dpr_theta_exponent(w, g, y, x)) % m;
        blk.table[i * k + j] = Entry{static_cast<std::uint32_t>(pos), e};
      }
    }
    for (std::size_t i = 0; i < k; ++i) a.block_of_[offset + i] = static_cast<std::uint32_t>(a.blocks_.size());
    offset += k;
    a.blocks_.push_back(std::move(blk));
  }
  a.check_axioms();
  return a;
}

void TubeAlgebra::check_axioms() const {
  const std::uint64_t m = category_.omega().modulus();
  for (const auto& blk : blocks_) {
    const std::size_t k = blk.centralizer.size();
    for (std::size_t x = 0; x < k; ++x) {
      for (std::size_t y = 0; y < k; ++y) {
        const Entry xy = blk.table[x * k + y];
        for (std::size_t z = 0; z < k; ++z) {
          const Entry yz = blk.table[y * k + z];
          const Entry left = blk.table[xy.target * k + z];
          const Entry right = blk.table[x * k + yz.target];
          if (left.target != right.target || (xy.exponent + left.exponent) % m != (yz.exponent + right.exponent) % m) {
            throw TubeAxiomError("tube algebra not associative on (" + pair_name(basis_[blk.offset + x]) + ", " +
                                 pair_name(basis_[blk.offset + y]) + ", " + pair_name(basis_[blk.offset + z]) + ")");
          }
        }
      }
    }
  }
  const TubeElement unit = one();
  const TubeElement tt = t();
  for (std::size_t i = 0; i < dimension(); ++i) {
    const TubeElement b = basis_element(i);
    if (!(multiply(unit, b) == b) || !(multiply(b, unit) == b))
      throw TubeAxiomError("unit fails on " + pair_name(basis_[i]));
    if (!(multiply(tt, b) == multiply(b, tt))) throw TubeAxiomError("t does not commute with " + pair_name(basis_[i]));
  }
}

std::optional<std::size_t> TubeAlgebra::index_of(Element g, Element h) const {
  if (g >= blocks_.size()) return std::nullopt;
  const auto& c = blocks_[g].centralizer;
  auto it = std::lower_bound(c.begin(), c.end(), h);
  if (it == c.end() || *it != h) return std::nullopt;
  return blocks_[g].offset + static_cast<std::size_t>(it - c.begin());
}

std::optional<TubeAlgebra::Product> TubeAlgebra::basis_product(std::size_t i, std::size_t j) const {
  if (block_of_[i] != block_of_[j]) return std::nullopt;
  const Block& blk = blocks_[block_of_[i]];
  const std::size_t k = blk.centralizer.size();
  const Entry e = blk.table[(i - blk.offset) * k + (j - blk.offset)];
  return Product{blk.offset + e.target,
                 Cyclotomic::root_of_unity(category_.omega().modulus(), static_cast<std::int64_t>(e.exponent))};
}

TubeElement TubeAlgebra::zero() const { return TubeElement{std::vector<Cyclotomic>(dimension())}; }

TubeElement TubeAlgebra::basis_element(std::size_t i) const {
  TubeElement u = zero();
  u.coeffs.at(i) = Cyclotomic(1L);
  return u;
}

TubeElement TubeAlgebra::one() const {
  TubeElement u = zero();
  for (const auto& blk : blocks_) u.coeffs[*index_of(blk.g, FiniteGroup::identity())] = Cyclotomic(1L);
  return u;
}

TubeElement TubeAlgebra::t() const {
  TubeElement u = zero();
  for (const auto& blk : blocks_) u.coeffs[*index_of(blk.g, blk.g)] = Cyclotomic(1L);
  return u;
}

TubeElement TubeAlgebra::multiply(const TubeElement& u, const TubeElement& v) const {
  if (u.coeffs.size() != dimension() || v.coeffs.size() != dimension())
    throw std::invalid_argument("TubeAlgebra::multiply: element of the wrong dimension");
  const std::uint64_t m = category_.omega().modulus();
  TubeElement out = zero();
  for (const auto& blk : blocks_) {
    const std::size_t k = blk.centralizer.size();
    for (std::size_t x = 0; x < k; ++x) {
      const Cyclotomic& ux = u.coeffs[blk.offset + x];
      if (ux.is_zero()) continue;
      for (std::size_t y = 0; y < k; ++y) {
        const Cyclotomic& vy = v.coeffs[blk.offset + y];
        if (vy.is_zero()) continue;
        const Entry e = blk.table[x * k + y];
        out.coeffs[blk.offset + e.target] +=
            ux * vy * Cyclotomic::root_of_unity(m, static_cast<std::int64_t>(e.exponent));
      }
    }
  }
  return out;
}

TubeElement TubeAlgebra::power(const TubeElement& u, std::uint64_t n) const {
  TubeElement result = one();
  TubeElement base = u;
  while (n > 0) {
    if (n & 1U) result = multiply(result, base);
    n >>= 1U;
    if (n > 0) base = multiply(base, base);
  }
  return result;
}

Cyclotomic TubeAlgebra::phi_g(const TubeElement& u, Element g) const {
  const auto idx = index_of(g, FiniteGroup::identity());
  if (!idx) throw std::invalid_argument("phi_g: element out of range");
  return u.coeffs.at(*idx).scale(Rational(category_.rank()));
}

Cyclotomic TubeAlgebra::phi(const TubeElement& u) const {
  Cyclotomic sum;
  for (const auto& blk : blocks_) sum += phi_g(u, blk.g);
  return sum;
}

std::uint32_t TubeAlgebra::position(const Block& blk, Element h) {
  return static_cast<std::uint32_t>(std::lower_bound(blk.centralizer.begin(), blk.centralizer.end(), h) -
                                    blk.centralizer.begin());
}

TubeAlgebra::Monomial TubeAlgebra::monomial_product(const Block& blk, Monomial x, Monomial y) const {
  const Entry e = blk.table[x.pos * blk.centralizer.size() + y.pos];
  return Monomial{e.target, (x.exponent + y.exponent + e.exponent) % category_.omega().modulus()};
}

TubeAlgebra::Monomial TubeAlgebra::t_power(const Block& blk, std::uint64_t n) const {
  Monomial result{position(blk, FiniteGroup::identity()), 0};
  Monomial base{position(blk, blk.g), 0};
  while (n > 0) {
    if (n & 1U) result = monomial_product(blk, result, base);
    n >>= 1U;
    if (n > 0) base = monomial_product(blk, base, base);
  }
  return result;
}

Cyclotomic TubeAlgebra::indicator(Element g, std::uint64_t n) const {
  if (g >= blocks_.size()) throw std::invalid_argument("TubeAlgebra::indicator: element out of range");
  const Block& blk = blocks_[g];
  const Monomial p = t_power(blk, n);
  if (p.pos != position(blk, FiniteGroup::identity())) return Cyclotomic(0L);
  // phi_g(t^n) = |G| zeta^e, so conj(phi_g) / |G| = zeta^-e.
  return Cyclotomic::root_of_unity(category_.omega().modulus(), -static_cast<std::int64_t>(p.exponent));
}

std::uint64_t TubeAlgebra::fs_exponent() const {
  const std::uint64_t exp = category_.group().exponent();
  const std::uint64_t bound = exp * exp;
  std::vector<Monomial> p, step;
  for (const auto& blk : blocks_) {
    step.push_back({position(blk, blk.g), 0});
    p.push_back(step.back());
  }
  for (std::uint64_t n = 1; n <= bound; ++n) {
    bool is_one = true;
    for (std::size_t b = 0; b < blocks_.size() && is_one; ++b)
      is_one = p[b].pos == position(blocks_[b], FiniteGroup::identity()) && p[b].exponent == 0;
    if (is_one) return n;
    for (std::size_t b = 0; b < blocks_.size(); ++b) p[b] = monomial_product(blocks_[b], p[b], step[b]);
  }
  throw std::runtime_error("tube fs_exponent: t^n != 1 for all n <= exp(G)^2; structure constants are inconsistent");
}

}  // namespace fuscat
