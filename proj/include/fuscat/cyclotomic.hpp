#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fuscat {

using Rational = mpq_class;

/// Exact element of the cyclotomic field Q(zeta_n).
///
/// The value is sum_k coeffs[k] * zeta_n^k, stored in a canonical form: the
/// coefficient polynomial is reduced modulo the n-th cyclotomic polynomial, so
/// only indices below phi(n) can be nonzero. Two values with the same
/// conductor are equal iff their coefficient vectors are equal; values with
/// different conductors are compared after lifting to the lcm.
///
/// Binary operations lift both operands to the lcm of their conductors. The
/// conductor is never reduced automatically; minimize() does it on demand.
class Cyclotomic {
 public:
  Cyclotomic();
  Cyclotomic(long value);  // NOLINT(google-explicit-constructor)
  Cyclotomic(const Rational& value);  // NOLINT(google-explicit-constructor)

  /// zeta_n^(k mod n). Throws std::invalid_argument for n == 0.
  static Cyclotomic root_of_unity(std::uint64_t n, std::int64_t k);

  /// Canonicalizes an arbitrary coefficient vector of length <= n
  /// (interpreted modulo x^n - 1 if longer).
  static Cyclotomic from_coeffs(std::uint64_t n, std::vector<Rational> coeffs);

  std::uint64_t conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;

  /// Same value expressed in Q(zeta_m); requires conductor() | m.
  Cyclotomic lift(std::uint64_t m) const;

  /// Same value in Q(zeta_d) for the least d with x in Q(zeta_d).
  Cyclotomic minimize() const;

  /// Complex conjugation, zeta -> zeta^-1.
  Cyclotomic conj() const;

  /// Galois automorphism zeta_n -> zeta_n^r. Requires gcd(r, n) == 1.
  Cyclotomic galois(std::int64_t r) const;

  Cyclotomic pow(std::uint64_t e) const;
  /// Multiplicative inverse via the product of the nontrivial Galois
  /// conjugates. Throws std::domain_error for zero.
  Cyclotomic inverse() const;
  Cyclotomic scale(const Rational& q) const;

  /// Least k >= 1 with x^k == 1, or nullopt if x is not a root of unity.
  std::optional<std::uint64_t> order_as_root_of_unity() const;

  std::optional<Rational> as_rational() const;
  std::optional<mpz_class> as_integer() const;

  /// Numeric value for reporting only.
  std::complex<double> to_complex() const;

  /// GAP-style rendering of the minimized value, e.g. "1/2 - E(8)^3".
  std::string to_string() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& other);
  Cyclotomic& operator-=(const Cyclotomic& other);
  Cyclotomic& operator*=(const Cyclotomic& other);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

 private:
  Cyclotomic(std::uint64_t n, std::vector<Rational> coeffs, bool canonical);
  void canonicalize();

  std::uint64_t conductor_ = 1;
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& x);

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

}  // namespace fuscat
