#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fuscat/cyclotomic.hpp"
#include "fuscat/pointed.hpp"

namespace fuscat {

/// Raised when the structure constants violate an algebra axiom; the message
/// names the offending basis elements.
class TubeAxiomError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TubeElement {
  std::vector<Cyclotomic> coeffs;

  friend bool operator==(const TubeElement& a, const TubeElement& b) { return a.coeffs == b.coeffs; }
};

/// Tube algebra of a pointed category C(G, omega), restricted to the
/// diagonal part spanned by Hom(V_g (x) V_h, V_h (x) V_g) for commuting g, h.
///
/// Basis vectors b(g,h) are the canonical morphisms rescaled by sqrt(|G|),
/// which makes every structure constant a root of unity. With the second
/// factor stacked below the first,
///
///   b(g,a) * b(g,b) = conj(theta_g(b, a)) b(g, ba),
///   theta_g(x, y) = omega(g,x,y) omega(x,y,g) / omega(x,g,y),
///
/// which is what composing the two tubes with all associators inserted
/// yields. Products of basis vectors with different g vanish.
class TubeAlgebra {
 public:
  /// Builds the structure constants and checks associativity on all basis
  /// triples, the unit, and centrality of t. Throws TubeAxiomError.
  static TubeAlgebra build(const PointedCategory& c);

  const PointedCategory& category() const { return category_; }
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<std::pair<Element, Element>>& basis() const { return basis_; }
  std::optional<std::size_t> index_of(Element g, Element h) const;

  struct Product {
    std::size_t index;
    Cyclotomic coefficient;
  };
  /// b_i * b_j, or nullopt when it vanishes.
  std::optional<Product> basis_product(std::size_t i, std::size_t j) const;

  TubeElement zero() const;
  TubeElement basis_element(std::size_t i) const;
  TubeElement one() const;  // sum_g b(g, e)
  TubeElement t() const;    // sum_g b(g, g)

  TubeElement multiply(const TubeElement& u, const TubeElement& v) const;
  TubeElement power(const TubeElement& u, std::uint64_t n) const;

  /// phi_g(u) = |G| * (coefficient of b(g, e) in u).
  Cyclotomic phi_g(const TubeElement& u, Element g) const;
  Cyclotomic phi(const TubeElement& u) const;

  /// conj(phi_g(t^n)) / |G|. The block of t at g is a single basis vector,
  /// so t^n is computed there by repeated squaring on (basis vector,
  /// exponent) pairs with the same structure constants as multiply().
  Cyclotomic indicator(Element g, std::uint64_t n) const;

  /// Least n >= 1 with t^n = one. Throws std::runtime_error when no such
  /// n <= exp(G)^2 exists.
  std::uint64_t fs_exponent() const;

 private:
  explicit TubeAlgebra(PointedCategory c) : category_(std::move(c)) {}

  struct Entry {
    std::uint32_t target;     // position in the centralizer of g
    std::uint64_t exponent;   // coefficient is zeta_m^exponent
  };
  struct Block {
    Element g;
    std::size_t offset;              // basis index of b(g, centralizer[0])
    std::vector<Element> centralizer;
    std::vector<Entry> table;        // |C| x |C|
  };

  struct Monomial {
    std::uint32_t pos;       // position in the centralizer of g
    std::uint64_t exponent;  // coefficient zeta_m^exponent
  };
  Monomial monomial_product(const Block& blk, Monomial x, Monomial y) const;
  Monomial t_power(const Block& blk, std::uint64_t n) const;
  static std::uint32_t position(const Block& blk, Element h);

  void check_axioms() const;

  PointedCategory category_;
  std::vector<std::pair<Element, Element>> basis_;
  std::vector<Block> blocks_;
  std::vector<std::uint32_t> block_of_;  // basis index -> block
};

}  // namespace fuscat
