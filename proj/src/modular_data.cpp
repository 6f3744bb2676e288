#include "fuscat/modular_data.hpp"

#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

namespace fuscat {

namespace {

std::string at(std::size_t i, std::size_t j) {
  std::ostringstream os;
  os << " at (" << i << ", " << j << ")";
  return os.str();
}

std::string at(std::size_t i, std::size_t j, std::size_t k) {
  std::ostringstream os;
  os << " at (" << i << ", " << j << ", " << k << ")";
  return os.str();
}

/// exp(2 pi i q) for a rational q.
Cyclotomic root_from_rotation(const Rational& q) {
  const mpz_class& den = q.get_den();
  mpz_class num = q.get_num() % den;
  if (num < 0) num += den;
  return Cyclotomic::root_of_unity(den.get_ui(), num.get_si());
}

Rational rotation(const Twist& t) {
  Rational q(t.num, t.den);
  q.canonicalize();
  return q;
}

std::set<std::uint64_t> prime_set(mpz_class n) {
  std::set<std::uint64_t> ps;
  if (n < 0) n = -n;
  for (std::uint64_t p = 2; n > 1 && p * p <= n; ++p) {
    if (n % p != 0) continue;
    ps.insert(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) ps.insert(n.get_ui());
  return ps;
}

}  // namespace

ModularData::ModularData(ModularDataInput in)
    : rank_(in.rank),
      labels_(std::move(in.labels)),
      dual_(std::move(in.dual)),
      twists_(std::move(in.twists)),
      dims_(std::move(in.dims)),
      global_dim_(std::move(in.global_dim)),
      s_(std::move(in.s_matrix)) {
  validate_basic();
  if (s_) validate_s_matrix();
  if (s_) {
    fusion_.assign(rank_ * rank_ * rank_, 0);
    for (std::size_t i = 0; i < rank_; ++i)
      for (std::size_t k = 0; k < rank_; ++k)
        for (std::size_t j = 0; j < rank_; ++j) fusion_[(i * rank_ + k) * rank_ + j] = verlinde(*this, i, k, j);
    if (in.fusion && *in.fusion != fusion_) {
      for (std::size_t x = 0; x < fusion_.size(); ++x)
        if ((*in.fusion)[x] != fusion_[x])
          throw ModularDataError("supplied fusion disagrees with Verlinde" +
                                 at(x / (rank_ * rank_), (x / rank_) % rank_, x % rank_));
    }
  } else if (in.fusion) {
    if (in.fusion->size() != rank_ * rank_ * rank_) throw ModularDataError("fusion tensor has wrong size");
    fusion_ = std::move(*in.fusion);
  } else {
    throw ModularDataError("modular data needs an S-matrix or a fusion tensor");
  }
  validate_fusion();
}

void ModularData::validate_basic() {
  if (rank_ == 0) throw ModularDataError("rank must be positive");
  if (labels_.empty()) {
    for (std::size_t i = 0; i < rank_; ++i) labels_.push_back(std::to_string(i));
  }
  if (labels_.size() != rank_ || dual_.size() != rank_ || twists_.size() != rank_ || dims_.size() != rank_)
    throw ModularDataError("labels, dual, twists and dims must all have length rank");
  for (std::size_t i = 0; i < rank_; ++i) {
    if (dual_[i] >= rank_ || dual_[dual_[i]] != i)
      throw ModularDataError("dual is not an involution at " + std::to_string(i));
    if (twists_[i].den <= 0) throw ModularDataError("twist denominator must be positive at " + std::to_string(i));
  }
  if (dual_[0] != 0) throw ModularDataError("unit must be self-dual");
  if (twists_[0].num % twists_[0].den != 0) throw ModularDataError("twist of the unit must be 1");
  if (!dims_[0].is_one()) throw ModularDataError("dimension of the unit must be 1");
  Cyclotomic sum;
  for (std::size_t i = 0; i < rank_; ++i) {
    if (dims_[i] != dims_[dual_[i]]) throw ModularDataError("d_i != d_dual(i) at " + std::to_string(i));
    if (dims_[i] != dims_[i].conj()) throw ModularDataError("dimension is not real at " + std::to_string(i));
    sum += dims_[i] * dims_[dual_[i]];
  }
  if (sum != global_dim_) throw ModularDataError("global_dim != sum of d_i d_dual(i)");
}

void ModularData::validate_s_matrix() {
  const auto& s = *s_;
  if (s.size() != rank_) throw ModularDataError("S-matrix has wrong number of rows");
  for (const auto& row : s)
    if (row.size() != rank_) throw ModularDataError("S-matrix row has wrong length");
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < rank_; ++j)
      if (s[i][j] != s[j][i]) throw ModularDataError("S not symmetric" + at(i, j));
  for (std::size_t i = 0; i < rank_; ++i) {
    for (std::size_t j = 0; j < rank_; ++j) {
      Cyclotomic unitary, square;
      for (std::size_t r = 0; r < rank_; ++r) {
        unitary += s[i][r] * s[j][r].conj();
        square += s[i][r] * s[r][j];
      }
      if (unitary != Cyclotomic(i == j ? 1L : 0L)) throw ModularDataError("S not unitary" + at(i, j));
      if (square != Cyclotomic(i == dual_[j] ? 1L : 0L)) throw ModularDataError("S^2 is not charge conjugation" + at(i, j));
    }
  }
  if (s[0][0] * s[0][0] * global_dim_ != Cyclotomic(1L)) throw ModularDataError("s_00^2 != 1 / dim");
  for (std::size_t i = 0; i < rank_; ++i)
    if (s[0][i] != dims_[i] * s[0][0]) throw ModularDataError("s_0i != d_i / sqrt(dim) at " + std::to_string(i));
}

void ModularData::validate_fusion() {
  const std::size_t r = rank_;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t k = 0; k < r; ++k) {
      Cyclotomic product_dim;
      for (std::size_t j = 0; j < r; ++j) {
        const std::int64_t n = fusion(i, k, j);
        if (n < 0) throw ModularDataError("negative fusion multiplicity" + at(i, k, j));
        if (fusion(k, i, j) != n) throw ModularDataError("fusion not commutative" + at(i, k, j));
        if (fusion(dual_[i], dual_[k], dual_[j]) != n) throw ModularDataError("fusion not duality invariant" + at(i, k, j));
        if (fusion(0, k, j) != (k == j ? 1 : 0)) throw ModularDataError("unit fusion fails" + at(0, k, j));
        product_dim += dims_[j].scale(Rational(n));
      }
      if (fusion(i, k, 0) != (k == dual_[i] ? 1 : 0)) throw ModularDataError("N^0_{ik} != delta(k, dual i)" + at(i, k, 0));
      if (product_dim != dims_[i] * dims_[k]) throw ModularDataError("dimensions not multiplicative" + at(i, k));
    }
  }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < r; ++k)
      for (std::size_t m = 0; m < r; ++m)
        for (std::size_t j = 0; j < r; ++j) {
          std::int64_t left = 0, right = 0;
          for (std::size_t l = 0; l < r; ++l) {
            left += fusion(i, k, l) * fusion(l, m, j);
            right += fusion(k, m, l) * fusion(i, l, j);
          }
          if (left != right) throw ModularDataError("fusion not associative" + at(i, k, m));
        }
}

Cyclotomic ModularData::twist_value(std::size_t i) const { return root_from_rotation(rotation(twists_[i])); }

const std::vector<std::vector<Cyclotomic>>& ModularData::s_matrix() const {
  if (!s_) throw std::logic_error("modular data has no S-matrix");
  return *s_;
}

bool ModularData::integral() const {
  for (const auto& d : dims_)
    if (!d.as_integer()) return false;
  return true;
}

std::int64_t verlinde(const ModularData& m, std::size_t i, std::size_t k, std::size_t j) {
  const auto& s = m.s_matrix();
  Cyclotomic sum;
  for (std::size_t r = 0; r < m.rank(); ++r) sum += s[i][r] * s[k][r] * s[j][r].conj() / s[0][r];
  const auto n = sum.as_integer();
  if (!n || *n < 0 || !n->fits_slong_p())
    throw ModularDataError("Verlinde formula gives a non-integer" + at(i, k, j) + ": " + sum.to_string());
  return n->get_si();
}

Cyclotomic bantay_indicator(const ModularData& m, std::size_t j, std::uint64_t n) {
  Cyclotomic sum;
  const Rational nn(static_cast<unsigned long>(n));
  for (std::size_t i = 0; i < m.rank(); ++i) {
    for (std::size_t k = 0; k < m.rank(); ++k) {
      const std::int64_t mult = m.fusion(i, k, j);
      if (mult == 0) continue;
      const Rational rot = (rotation(m.twist(i)) - rotation(m.twist(k))) * nn;
      sum += (m.dim(i) * m.dim(k) * root_from_rotation(rot)).scale(Rational(mult));
    }
  }
  return sum / m.global_dim();
}

std::uint64_t fs_exponent(const ModularData& m) {
  std::uint64_t e = 1;
  for (std::size_t i = 0; i < m.rank(); ++i) e = std::lcm(e, rotation(m.twist(i)).get_den().get_ui());
  return e;
}

std::uint64_t etingof_exponent(const ModularData& m) {
  std::uint64_t e = 1;
  for (std::size_t i = 0; i < m.rank(); ++i)
    for (std::size_t j = 0; j < m.rank(); ++j)
      for (std::size_t k = 0; k < m.rank(); ++k) {
        if (m.fusion(i, j, k) == 0) continue;
        const Rational r = rotation(m.twist(k)) - rotation(m.twist(i)) - rotation(m.twist(j));
        e = std::lcm(e, r.get_den().get_ui());
      }
  return e;
}

mpz_class unit_multiplicity_of_regular_power(const ModularData& m, std::uint32_t p) {
  std::vector<mpz_class> v(m.rank(), 1);
  if (p == 0) return 1;
  for (std::uint32_t step = 1; step < p; ++step) {
    std::vector<mpz_class> next(m.rank(), 0);
    for (std::size_t i = 0; i < m.rank(); ++i)
      for (std::size_t k = 0; k < m.rank(); ++k)
        for (std::size_t j = 0; j < m.rank(); ++j)
          if (const auto n = m.fusion(i, k, j); n != 0) next[j] += v[i] * n;
    v = std::move(next);
  }
  return v[0];
}

bool Diagnostics::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

Diagnostics diagnostics(const ModularData& m, const std::vector<std::uint32_t>& primes) {
  Diagnostics out;
  out.fs_exponent = fs_exponent(m);
  out.etingof_exponent = etingof_exponent(m);
  const std::uint64_t fs = out.fs_exponent, ex = out.etingof_exponent;
  auto add = [&](std::string name, bool ok, std::string detail) {
    out.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  add("fsexp_over_exp", fs % ex == 0 && (fs / ex == 1 || fs / ex == 2),
      "FSexp = " + std::to_string(fs) + ", exp = " + std::to_string(ex));

  if (m.integral()) {
    const auto dim = m.global_dim().as_integer();
    if (dim) {
      const auto a = prime_set(mpz_class(static_cast<unsigned long>(fs)));
      const auto b = prime_set(*dim);
      add("cauchy_prime_factors", a == b, "FSexp = " + std::to_string(fs) + ", dim = " + dim->get_str());
    }
  }

  bool nu2_ok = true, periodic = true, at_exponent = true, real = true, bounded = true;
  std::ostringstream nu2_detail;
  bool positive_dims = true;
  for (std::size_t j = 0; j < m.rank(); ++j) {
    const auto d = m.dim(j).to_complex();
    if (d.real() <= 0) positive_dims = false;
  }
  for (std::size_t j = 0; j < m.rank(); ++j) {
    const Cyclotomic nu2 = bantay_indicator(m, j, 2);
    nu2_detail << (j ? ", " : "") << m.labels()[j] << ": " << nu2;
    if (nu2 != Cyclotomic(0L) && nu2 != Cyclotomic(1L) && nu2 != Cyclotomic(-1L)) nu2_ok = false;
    if (bantay_indicator(m, j, fs) != m.dim(j)) at_exponent = false;
    for (std::uint64_t n = 1; n <= fs; ++n) {
      const Cyclotomic nu = bantay_indicator(m, j, n);
      if (nu != bantay_indicator(m, j, n + fs)) periodic = false;
      if (nu != nu.conj()) real = false;
      if (positive_dims && nu != m.dim(j) && std::abs(nu.to_complex()) > m.dim(j).to_complex().real() + 1e-9)
        bounded = false;
    }
  }
  add("nu2_in_0_pm1", nu2_ok, nu2_detail.str());
  add("periodic_in_fsexp", periodic, "period " + std::to_string(fs));
  add("nu_at_fsexp_is_dim", at_exponent, "n = " + std::to_string(fs));
  add("indicators_real", real, "n = 1.." + std::to_string(fs));
  if (positive_dims) add("indicator_bound", bounded, "|nu_n(X_j)| <= d_j");

  if (m.integral()) {
    for (auto p : primes) {
      if (fs % p == 0) continue;
      const mpz_class base = unit_multiplicity_of_regular_power(m, 1);
      const mpz_class power = unit_multiplicity_of_regular_power(m, p);
      const mpz_class diff = power - base;
      add("unit_congruence_mod_" + std::to_string(p), diff % p == 0,
          "N0(V) = " + base.get_str() + ", N0(V^" + std::to_string(p) + ") = " + power.get_str());
    }
  }
  return out;
}

namespace {

ModularDataInput four_by_four(std::vector<std::string> labels, std::vector<Twist> twists,
                              const std::vector<std::vector<long>>& signs) {
  ModularDataInput in;
  in.rank = 4;
  in.labels = std::move(labels);
  in.dual = {0, 1, 2, 3};
  in.twists = std::move(twists);
  in.dims.assign(4, Cyclotomic(1L));
  in.global_dim = Cyclotomic(4L);
  std::vector<std::vector<Cyclotomic>> s(4, std::vector<Cyclotomic>(4));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) s[i][j] = Cyclotomic(Rational(signs[i][j], 2));
  in.s_matrix = std::move(s);
  return in;
}

}  // namespace

ModularData modular_fixture(const std::string& name) {
  if (name == "toric") {
    // Center of Vec(Z/2): 1, e, m, f = e x m.
    return ModularData(four_by_four({"1", "e", "m", "f"}, {{0, 1}, {0, 1}, {0, 1}, {1, 2}},
                                    {{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}}));
  }
  if (name == "double-semion") {
    // Center of Vec(Z/2, omega_1): semion x anti-semion, labels 1, s, sbar, b = s x sbar.
    return ModularData(four_by_four({"1", "s", "sbar", "b"}, {{0, 1}, {1, 4}, {3, 4}, {0, 1}},
                                    {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}}));
  }
  throw std::invalid_argument("unknown modular data fixture: " + name);
}

std::vector<std::string> modular_fixture_names() { return {"toric", "double-semion"}; }

}  // namespace fuscat
