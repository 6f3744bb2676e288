#include "fuscat/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace fuscat {

namespace {

std::vector<std::int64_t> compute_cyclotomic_polynomial(std::uint64_t n) {
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, by exact long division.
  std::vector<std::int64_t> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (std::uint64_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& div = cyclotomic_polynomial(d);
    const std::size_t dd = div.size() - 1;
    std::vector<std::int64_t> quot(num.size() - dd, 0);
    for (std::size_t i = num.size(); i-- > dd;) {
      const std::int64_t q = num[i];  // divisor is monic
      quot[i - dd] = q;
      if (q == 0) continue;
      for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= q * div[j];
    }
    num = std::move(quot);
  }
  return num;
}

struct SparsePoly {
  std::vector<std::pair<std::size_t, std::int64_t>> low_terms;  // nonzero terms below the leading one
  std::size_t degree = 0;
};

const SparsePoly& sparse_cyclotomic(std::uint64_t n) {
  static std::mutex mu;
  static std::unordered_map<std::uint64_t, SparsePoly> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  const auto& dense = cyclotomic_polynomial(n);
  SparsePoly sp;
  sp.degree = dense.size() - 1;
  for (std::size_t j = 0; j < sp.degree; ++j)
    if (dense[j] != 0) sp.low_terms.emplace_back(j, dense[j]);
  std::lock_guard lock(mu);
  return cache.emplace(n, std::move(sp)).first->second;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return std::lcm(a, b); }

std::uint64_t mod_index(std::int64_t k, std::uint64_t n) {
  const auto nn = static_cast<std::int64_t>(n);
  return static_cast<std::uint64_t>(((k % nn) + nn) % nn);
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
  static std::mutex mu;
  static std::unordered_map<std::uint64_t, std::vector<std::int64_t>> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  std::vector<std::int64_t> poly = n == 1 ? std::vector<std::int64_t>{-1, 1} : compute_cyclotomic_polynomial(n);
  std::lock_guard lock(mu);
  return cache.emplace(n, std::move(poly)).first->second;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

Cyclotomic::Cyclotomic() : conductor_(1), coeffs_(1) {}

Cyclotomic::Cyclotomic(long value) : conductor_(1), coeffs_{Rational(value)} {}

Cyclotomic::Cyclotomic(const Rational& value) : conductor_(1), coeffs_{value} { coeffs_[0].canonicalize(); }

Cyclotomic::Cyclotomic(std::uint64_t n, std::vector<Rational> coeffs, bool canonical)
    : conductor_(n), coeffs_(std::move(coeffs)) {
  if (!canonical) canonicalize();
}

Cyclotomic Cyclotomic::root_of_unity(std::uint64_t n, std::int64_t k) {
  if (n == 0) throw std::invalid_argument("root_of_unity: n must be positive");
  std::vector<Rational> c(n);
  c[mod_index(k, n)] = 1;
  return Cyclotomic(n, std::move(c), false);
}

Cyclotomic Cyclotomic::from_coeffs(std::uint64_t n, std::vector<Rational> coeffs) {
  if (n == 0) throw std::invalid_argument("from_coeffs: conductor must be positive");
  std::vector<Rational> c(n);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    coeffs[k].canonicalize();
    c[k % n] += coeffs[k];
  }
  return Cyclotomic(n, std::move(c), false);
}

void Cyclotomic::canonicalize() {
  const auto& phi = sparse_cyclotomic(conductor_);
  coeffs_.resize(conductor_);
  for (std::size_t i = conductor_; i-- > phi.degree;) {
    if (sgn(coeffs_[i]) == 0) continue;
    const Rational q = coeffs_[i];
    for (const auto& [j, p] : phi.low_terms) coeffs_[i - phi.degree + j] -= q * p;
    coeffs_[i] = 0;
  }
}

bool Cyclotomic::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

bool Cyclotomic::is_one() const {
  if (coeffs_[0] != 1) return false;
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

Cyclotomic Cyclotomic::lift(std::uint64_t m) const {
  if (m == 0 || m % conductor_ != 0)
    throw std::invalid_argument("lift: target conductor must be a multiple of the current one");
  if (m == conductor_) return *this;
  const std::uint64_t step = m / conductor_;
  std::vector<Rational> c(m);
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (sgn(coeffs_[k]) != 0) c[k * step] = coeffs_[k];
  return Cyclotomic(m, std::move(c), false);
}

Cyclotomic Cyclotomic::minimize() const {
  const std::uint64_t n = conductor_;
  for (std::uint64_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    // x lies in Q(zeta_d) iff it is fixed by every zeta_n -> zeta_n^r with r = 1 mod d.
    bool fixed = true;
    for (std::uint64_t r = 1 + d; r < n && fixed; r += d)
      if (std::gcd(r, n) == 1) fixed = galois(static_cast<std::int64_t>(r)) == *this;
    if (!fixed) continue;
    // Solve x = sum_k c_k zeta_d^k, k < phi(d), in the canonical basis of Q(zeta_n).
    const std::size_t rows = euler_phi(n), cols = euler_phi(d);
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols + 1));
    for (std::size_t k = 0; k < cols; ++k) {
      const Cyclotomic b = root_of_unity(d, static_cast<std::int64_t>(k)).lift(n);
      for (std::size_t i = 0; i < rows; ++i) a[i][k] = b.coeffs_[i];
    }
    for (std::size_t i = 0; i < rows; ++i) a[i][cols] = coeffs_[i];
    std::size_t pivot_row = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t k = 0; k < cols && pivot_row < rows; ++k) {
      std::size_t p = pivot_row;
      while (p < rows && sgn(a[p][k]) == 0) ++p;
      if (p == rows) continue;
      std::swap(a[p], a[pivot_row]);
      for (std::size_t i = 0; i < rows; ++i) {
        if (i == pivot_row || sgn(a[i][k]) == 0) continue;
        const Rational f = a[i][k] / a[pivot_row][k];
        for (std::size_t j = k; j <= cols; ++j) a[i][j] -= f * a[pivot_row][j];
      }
      pivot_col.push_back(k);
      ++pivot_row;
    }
    std::vector<Rational> c(d);
    for (std::size_t r = 0; r < pivot_col.size(); ++r) c[pivot_col[r]] = a[r][cols] / a[r][pivot_col[r]];
    return Cyclotomic(d, std::move(c), true);
  }
  return *this;
}

Cyclotomic Cyclotomic::conj() const { return galois(-1); }

Cyclotomic Cyclotomic::galois(std::int64_t r) const {
  const auto n = conductor_;
  if (std::gcd(static_cast<std::uint64_t>(std::abs(r)), n) != 1 && n != 1)
    throw std::invalid_argument("galois: exponent must be coprime to the conductor");
  std::vector<Rational> c(n);
  const std::uint64_t rr = mod_index(r, n);
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (sgn(coeffs_[k]) != 0) c[(k * rr) % n] += coeffs_[k];
  return Cyclotomic(n, std::move(c), false);
}

Cyclotomic Cyclotomic::pow(std::uint64_t e) const {
  Cyclotomic result(1L);
  Cyclotomic base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("Cyclotomic::inverse: division by zero");
  if (auto q = as_rational()) return Cyclotomic(Rational(1) / *q);
  Cyclotomic others(1L);
  for (std::uint64_t r = 2; r < conductor_; ++r)
    if (std::gcd(r, conductor_) == 1) others *= galois(static_cast<std::int64_t>(r));
  const auto norm = (*this * others).as_rational();
  if (!norm) throw std::logic_error("Cyclotomic::inverse: norm is not rational");
  return others.scale(Rational(1) / *norm);
}

Cyclotomic Cyclotomic::scale(const Rational& q) const {
  Cyclotomic out = *this;
  Rational r = q;
  r.canonicalize();
  for (auto& c : out.coeffs_) c *= r;
  return out;
}

std::optional<std::uint64_t> Cyclotomic::order_as_root_of_unity() const {
  if (!(*this * conj()).is_one()) return std::nullopt;
  // Roots of unity in Q(zeta_n) are +-zeta_n^j, so the order divides lcm(2, n).
  const std::uint64_t bound = lcm_u64(2, conductor_);
  for (std::uint64_t k = 1; k <= bound; ++k) {
    if (bound % k != 0) continue;
    if (pow(k).is_one()) return k;
  }
  return std::nullopt;
}

std::optional<Rational> Cyclotomic::as_rational() const {
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    if (sgn(coeffs_[k]) != 0) return std::nullopt;
  return coeffs_[0];
}

std::optional<mpz_class> Cyclotomic::as_integer() const {
  auto q = as_rational();
  if (!q || q->get_den() != 1) return std::nullopt;
  return q->get_num();
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> z{0.0, 0.0};
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (sgn(coeffs_[k]) == 0) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(conductor_);
    z += coeffs_[k].get_d() * std::polar(1.0, angle);
  }
  return z;
}

std::string Cyclotomic::to_string() const {
  if (conductor_ > 1) {
    const Cyclotomic m = minimize();
    if (m.conductor_ < conductor_) return m.to_string();
  }
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << "E(" << conductor_ << ')';
    if (k != 1) os << '^' << k;
  }
  if (first) os << '0';
  return os.str();
}

Cyclotomic Cyclotomic::operator-() const { return scale(Rational(-1)); }

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other) {
  const std::uint64_t m = lcm_u64(conductor_, other.conductor_);
  if (m != conductor_) *this = lift(m);
  const Cyclotomic& rhs = other.conductor_ == m ? other : other.lift(m);
  for (std::size_t k = 0; k < m; ++k)
    if (sgn(rhs.coeffs_[k]) != 0) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& other) { return *this += -other; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& other) {
  const std::uint64_t m = lcm_u64(conductor_, other.conductor_);
  const Cyclotomic lhs = conductor_ == m ? *this : lift(m);
  const Cyclotomic rhs = other.conductor_ == m ? other : other.lift(m);
  std::vector<std::size_t> nz_lhs, nz_rhs;
  for (std::size_t k = 0; k < m; ++k) {
    if (sgn(lhs.coeffs_[k]) != 0) nz_lhs.push_back(k);
    if (sgn(rhs.coeffs_[k]) != 0) nz_rhs.push_back(k);
  }
  std::vector<Rational> c(m);
  for (auto i : nz_lhs)
    for (auto j : nz_rhs) c[(i + j) % m] += lhs.coeffs_[i] * rhs.coeffs_[j];
  *this = Cyclotomic(m, std::move(c), false);
  return *this;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  const std::uint64_t m = lcm_u64(a.conductor_, b.conductor_);
  return a.lift(m).coeffs_ == b.lift(m).coeffs_;
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& x) { return os << x.to_string(); }

}  // namespace fuscat
