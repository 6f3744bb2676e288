#pragma once

#include <cstdint>
#include <vector>

#include "fuscat/cocycle.hpp"
#include "fuscat/cyclotomic.hpp"
#include "fuscat/group.hpp"

namespace fuscat {

class PointedCategory;

/// Duality data of the invertible simple V_g in C(G, omega), with
/// db_g = 1 and all canonical isomorphisms V_g (x) V_h = V_gh treated as
/// identities.
struct SimpleObject {
  Element g;
  Element dual;
  Cyclotomic dimension;  // always 1
  Cyclotomic ev;         // omega(g, g^-1, g)^-1
  Cyclotomic pivotal;    // j_g = omega(g^-1, g, g^-1)

  /// (V_g (x) ev_g) . Phi . (db_g (x) V_g) == id and j_g == ev_g.
  bool zigzag_consistent(const PointedCategory& c) const;
};

/// The category of G-graded vector spaces with associator given by a
/// normalized 3-cocycle omega.
class PointedCategory {
 public:
  /// Throws CochainError if omega fails the cocycle identity.
  explicit PointedCategory(Cocycle3 omega);

  const FiniteGroup& group() const { return omega_.group(); }
  const Cocycle3& omega() const { return omega_; }
  std::uint32_t rank() const { return group().order(); }
  SimpleObject simple(Element g) const;

 private:
  Cocycle3 omega_;
};

/// nu_n(V_g): zero unless g^n = e, otherwise prod_{j=0}^{n-1} omega(g, g^j, g).
///
/// In particular nu_1(V_g) = delta_{g,e}; for C(Z/2, omega_1) and the
/// generator the sequence runs 0, -1, 0, 1, 0, -1, ...
Cyclotomic indicator(const PointedCategory& c, Element g, std::uint64_t n);

/// nu_{n,r}(V_g) = nu_n(V_g)^r, since every Hom(1, V_g^{(x)n}) is at most one-dimensional.
Cyclotomic higher_indicator(const PointedCategory& c, Element g, std::uint64_t n, std::uint64_t r);

/// ord(g) * ord(res_<g> [omega]).
std::uint64_t fs_exponent_object(const PointedCategory& c, Element g);

/// lcm over maximal cyclic subgroups C of |C| * ord(res_C [omega]).
std::uint64_t fs_exponent_category(const PointedCategory& c);

/// rows indexed by g, column n-1 holds nu_n(V_g) for n = 1..n_max.
std::vector<std::vector<Cyclotomic>> indicator_table(const PointedCategory& c, std::uint64_t n_max);

/// Multiplicity of the unit in V^{(x)p} for V the sum of all simples,
/// computed by convolution in the fusion ring Z[G].
std::uint64_t unit_multiplicity_of_regular_power(const FiniteGroup& g, std::uint32_t p);

}  // namespace fuscat
