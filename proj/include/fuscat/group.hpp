#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fuscat {

using Element = std::uint32_t;

class Subgroup;

/// Raised when a Cayley table or a map between groups violates a group axiom.
class GroupAxiomError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Finite group stored as a full Cayley table. Element 0 is the identity.
///
/// Copies are cheap: the table is shared and immutable.
class FiniteGroup {
 public:
  /// Validates closure, identity at index 0, inverses and associativity.
  /// Violations are reported with the offending elements.
  static FiniteGroup from_table(std::vector<std::vector<Element>> table);

  static FiniteGroup cyclic(std::uint32_t n);
  static FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);
  /// Dihedral group of order 2n; index i + n*j stands for r^i s^j.
  static FiniteGroup dihedral(std::uint32_t n);
  /// Symmetric group on n <= 4 points, permutations in lexicographic order.
  static FiniteGroup symmetric(std::uint32_t n);

  std::uint32_t order() const { return static_cast<std::uint32_t>(data_->inverse.size()); }
  static constexpr Element identity() { return 0; }

  Element mul(Element a, Element b) const { return data_->table[a * order() + b]; }
  Element inverse(Element a) const { return data_->inverse[a]; }
  Element power(Element g, std::int64_t k) const;
  std::vector<std::vector<Element>> table() const;
  std::span<const Element> flat_table() const { return data_->table; }

  std::uint32_t element_order(Element g) const { return data_->element_order[g]; }
  std::uint64_t exponent() const;
  bool is_abelian() const;
  bool commute(Element a, Element b) const { return mul(a, b) == mul(b, a); }
  std::size_t conjugacy_class_count() const;

  Subgroup centralizer(Element g) const;
  Subgroup cyclic_subgroup(Element g) const;
  std::vector<Subgroup> cyclic_subgroups() const;
  std::vector<Subgroup> maximal_cyclic_subgroups() const;
  Subgroup whole() const;

  /// All (g, h) with gh = hg in lexicographic order.
  std::vector<std::pair<Element, Element>> commuting_pairs() const;

  /// True when f (indexed by element of this group) is a bijective
  /// homomorphism onto `target`.
  bool is_isomorphism(const FiniteGroup& target, std::span<const Element> f) const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b);

 private:
  struct Data {
    std::vector<Element> table;  // row-major order x order
    std::vector<Element> inverse;
    std::vector<std::uint32_t> element_order;
  };
  explicit FiniteGroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

/// Subset of a parent group closed under products and inverses.
class Subgroup {
 public:
  /// Throws GroupAxiomError if `elements` is not a subgroup.
  Subgroup(FiniteGroup parent, std::vector<Element> elements);

  const FiniteGroup& parent() const { return parent_; }
  const std::vector<Element>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(Element g) const;

  /// The subgroup as a standalone group; element i corresponds to elements()[i].
  FiniteGroup as_group() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements_ == b.elements_; }

 private:
  FiniteGroup parent_;
  std::vector<Element> elements_;  // sorted; identity first
};

/// Resolves builtin names: "Z<N>", "Z<N>xZ<M>", "S3", "S4", "D<N>".
std::optional<FiniteGroup> builtin_group(const std::string& name);

}  // namespace fuscat
