#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "fuscat/cyclotomic.hpp"
#include "fuscat/group.hpp"

namespace fuscat {

/// Raised for malformed cochain tables (wrong size, not normalized, modulus mismatch).
class CochainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a computation would exceed the configured matrix budget.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Normalized 2-cochain G x G -> Z/m; value beta(a,b) = zeta_m^exponent(a,b).
class Cochain2 {
 public:
  Cochain2(FiniteGroup group, std::uint64_t modulus, std::vector<std::uint64_t> exponents);
  static Cochain2 zero(FiniteGroup group, std::uint64_t modulus);

  const FiniteGroup& group() const { return group_; }
  std::uint64_t modulus() const { return modulus_; }
  const std::vector<std::uint64_t>& exponents() const { return exps_; }
  std::uint64_t exponent(Element a, Element b) const { return exps_[a * group_.order() + b]; }

 private:
  FiniteGroup group_;
  std::uint64_t modulus_;
  std::vector<std::uint64_t> exps_;
};

/// Normalized 3-cochain G^3 -> Z/m; value omega(a,b,c) = zeta_m^exponent(a,b,c).
///
/// Construction checks shape and normalization only; use check_cocycle()
/// for the cocycle identity.
class Cocycle3 {
 public:
  Cocycle3(FiniteGroup group, std::uint64_t modulus, std::vector<std::uint64_t> exponents);
  static Cocycle3 trivial(FiniteGroup group, std::uint64_t modulus = 1);

  const FiniteGroup& group() const { return group_; }
  std::uint64_t modulus() const { return modulus_; }
  const std::vector<std::uint64_t>& exponents() const { return exps_; }

  std::uint64_t exponent(Element a, Element b, Element c) const {
    const std::size_t n = group_.order();
    return exps_[(a * n + b) * n + c];
  }
  Cyclotomic value(Element a, Element b, Element c) const;

  /// Same cocycle with exponents rescaled to a modulus that is a multiple of modulus().
  Cocycle3 with_modulus(std::uint64_t modulus) const;
  /// omega^k.
  Cocycle3 power(std::int64_t k) const;

  friend bool operator==(const Cocycle3& a, const Cocycle3& b);

 private:
  FiniteGroup group_;
  std::uint64_t modulus_;
  std::vector<std::uint64_t> exps_;
};

/// The cocycle omega_t on Z/N with modulus N^2:
/// exponent(l, m, n) = t * l * (m + n - <m + n>) / N, where <.> is reduction into [0, N).
Cocycle3 omega_t(std::uint32_t n, std::int64_t t);

bool check_cocycle(const Cocycle3& omega);

/// d(beta)(a,b,c) = beta(b,c) - beta(ab,c) + beta(a,bc) - beta(a,b).
Cocycle3 coboundary(const Cochain2& beta);

/// d(alpha)(a,b) = alpha(b) - alpha(ab) + alpha(a); alpha must vanish at the identity.
Cochain2 coboundary1(const FiniteGroup& group, std::uint64_t modulus, std::span<const std::uint64_t> alpha);

/// 2-cocycle identity beta(b,c) beta(a,bc) = beta(ab,c) beta(a,b).
bool check_cocycle2(const Cochain2& beta);

/// Pointwise product of two cocycles on the same group (modulus becomes the lcm).
Cocycle3 multiply(const Cocycle3& a, const Cocycle3& b);

/// omega (x) omega' on G x G' with the indexing of FiniteGroup::direct_product.
Cocycle3 external_product(const Cocycle3& a, const Cocycle3& b);

/// A 2-cochain beta with d(beta) = omega as C^x-valued functions, or nullopt.
///
/// Solved exactly over Z/(m|G|) by Smith-type diagonalization of the
/// coboundary map; the witness carries modulus m|G|, which is always enough
/// for a C^x-valued primitive to be chosen with root-of-unity values.
std::optional<Cochain2> is_coboundary(const Cocycle3& omega);

/// Order of [omega] in H^3(G, C^x).
std::uint64_t class_order(const Cocycle3& omega);

/// Restriction to a subgroup, expressed on Subgroup::as_group().
Cocycle3 restrict(const Cocycle3& omega, const Subgroup& sub);

/// Push-forward along an isomorphism iso: omega.group() -> target.
Cocycle3 transport(const Cocycle3& omega, const FiniteGroup& target, std::span<const Element> iso);

/// prod_{k=0}^{ord(g)-1} omega(g, g^k, g). Its order as a root of unity is the
/// order of the restricted class on <g>.
Cyclotomic eps_invariant(const Cocycle3& omega, Element g);

/// Exponent (mod m) of omega(g,x,y) omega(x,y,g) / omega(x,g,y), defined for
/// x, y in the centralizer of g.
std::uint64_t dpr_theta_exponent(const Cocycle3& omega, Element g, Element x, Element y);
Cyclotomic dpr_theta(const Cocycle3& omega, Element g, Element x, Element y);

struct CohomologyBasis {
  std::uint64_t modulus = 1;
  /// Invariant factors of H^3(G; Z/m), each > 1, in divisibility order.
  std::vector<std::uint64_t> invariant_factors;
  /// One cocycle per factor; representatives[i] has order invariant_factors[i] in H^3(G; Z/m).
  std::vector<Cocycle3> representatives;
};

/// H^3(G; Z/m) = ker d3 / im d2 with normalized cochains.
/// Throws ResourceLimitError when the d3 matrix exceeds `max_entries`.
CohomologyBasis cohomology_basis(const FiniteGroup& group, std::uint64_t modulus,
                                 std::size_t max_entries = 60'000'000);

}  // namespace fuscat
