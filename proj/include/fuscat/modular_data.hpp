#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fuscat/cyclotomic.hpp"

namespace fuscat {

/// Raised when modular data fails a consistency axiom; the message names the
/// axiom and the witnessing labels.
class ModularDataError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Rotation number p/q: the twist is exp(2 pi i p / q).
struct Twist {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

/// Raw modular data as read from a file, before validation.
struct ModularDataInput {
  std::size_t rank = 0;
  std::vector<std::string> labels;
  std::vector<std::size_t> dual;
  std::vector<Twist> twists;
  std::vector<Cyclotomic> dims;
  Cyclotomic global_dim;
  std::optional<std::vector<std::vector<Cyclotomic>>> s_matrix;
  /// fusion[(i * rank + k) * rank + j] = N^j_{ik}
  std::optional<std::vector<std::int64_t>> fusion;
};

/// Validated (S, T) data of a modular category.
///
/// Either the S-matrix or the fusion tensor must be supplied. With S, the
/// fusion rules are derived by the Verlinde formula; if both are present
/// they must agree.
class ModularData {
 public:
  /// Checks every axiom; throws ModularDataError naming the first failure.
  explicit ModularData(ModularDataInput in);

  std::size_t rank() const { return rank_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t dual(std::size_t i) const { return dual_[i]; }
  const Twist& twist(std::size_t i) const { return twists_[i]; }
  /// omega_i = exp(2 pi i p_i / q_i).
  Cyclotomic twist_value(std::size_t i) const;
  const Cyclotomic& dim(std::size_t i) const { return dims_[i]; }
  const Cyclotomic& global_dim() const { return global_dim_; }
  bool has_s_matrix() const { return s_.has_value(); }
  const std::vector<std::vector<Cyclotomic>>& s_matrix() const;

  /// N^j_{ik}.
  std::int64_t fusion(std::size_t i, std::size_t k, std::size_t j) const {
    return fusion_[(i * rank_ + k) * rank_ + j];
  }
  const std::vector<std::int64_t>& fusion_tensor() const { return fusion_; }

  /// True when every d_i is a rational integer.
  bool integral() const;

 private:
  void validate_basic();
  void validate_s_matrix();
  void validate_fusion();

  std::size_t rank_;
  std::vector<std::string> labels_;
  std::vector<std::size_t> dual_;
  std::vector<Twist> twists_;
  std::vector<Cyclotomic> dims_;
  Cyclotomic global_dim_;
  std::optional<std::vector<std::vector<Cyclotomic>>> s_;
  std::vector<std::int64_t> fusion_;
};

/// N^j_{ik} = sum_r s_{ir} s_{kr} conj(s_{jr}) / s_{0r}. Throws
/// ModularDataError if the value is not a nonnegative integer, and
/// std::logic_error if the data carries no S-matrix.
std::int64_t verlinde(const ModularData& m, std::size_t i, std::size_t k, std::size_t j);

/// nu_n(X_j) = (1/dim) sum_{i,k} N^j_{ik} d_i d_k (omega_i / omega_k)^n.
Cyclotomic bantay_indicator(const ModularData& m, std::size_t j, std::uint64_t n);

/// Order of the twist: lcm of the reduced denominators q_i.
std::uint64_t fs_exponent(const ModularData& m);

/// Order of the monodromy: least n with (omega_k / (omega_i omega_j))^n = 1
/// on every channel N^k_{ij} != 0.
std::uint64_t etingof_exponent(const ModularData& m);

/// Multiplicity of the unit in V^{(x)p}, V the sum of all simples.
mpz_class unit_multiplicity_of_regular_power(const ModularData& m, std::uint32_t p);

struct DiagnosticCheck {
  std::string name;
  bool passed;
  std::string detail;
};

struct Diagnostics {
  std::uint64_t fs_exponent;
  std::uint64_t etingof_exponent;
  std::vector<DiagnosticCheck> checks;
  bool all_passed() const;
};

/// Consistency checks implied by the theory of indicators:
/// FSexp / exp in {1, 2}; shared prime factors of FSexp and dim (integral
/// data); nu_2 in {0, 1, -1}; periodicity and nu_FSexp = d_j; reality; the
/// bound |nu_n| <= d_j; and the unit-multiplicity congruence mod p for
/// primes p in `primes` not dividing FSexp (integral data).
Diagnostics diagnostics(const ModularData& m, const std::vector<std::uint32_t>& primes = {2, 3, 5, 7});

/// Bundled fixtures: "toric", "double-semion".
ModularData modular_fixture(const std::string& name);
std::vector<std::string> modular_fixture_names();

}  // namespace fuscat
