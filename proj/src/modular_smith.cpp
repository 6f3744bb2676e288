#include "fuscat/modular_smith.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace fuscat {

namespace {

struct ExtGcd {
  std::int64_t g, s, t;  // s*a + t*b = g
};

ExtGcd ext_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
    old_t = std::exchange(t, old_t - q * t);
  }
  return {old_r, old_s, old_t};
}

}  // namespace

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t mod_reduce(std::int64_t a, std::uint64_t m) {
  const auto mm = static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(((a % mm) + mm) % mm);
}

std::optional<std::uint64_t> solve_scalar(std::uint64_t d, std::uint64_t c, std::uint64_t m) {
  d %= m;
  c %= m;
  const std::uint64_t g = std::gcd(d, m);  // gcd(0, m) = m
  if (c % g != 0) return std::nullopt;
  const std::uint64_t mg = m / g;
  if (mg == 1) return 0;
  const auto e = ext_gcd(static_cast<std::int64_t>(d / g), static_cast<std::int64_t>(mg));
  const std::uint64_t inv = mod_reduce(e.s, mg);
  return mod_mul(c / g, inv, mg);
}

ModMatrix::ModMatrix(std::size_t rows, std::size_t cols, std::uint64_t modulus)
    : rows_(rows), cols_(cols), modulus_(modulus), data_(rows * cols, 0) {
  if (modulus == 0) throw std::invalid_argument("ModMatrix: modulus must be positive");
}

void ModMatrix::add(std::size_t r, std::size_t c, std::int64_t delta) {
  auto& x = (*this)(r, c);
  x = (x + mod_reduce(delta, modulus_)) % modulus_;
}

std::vector<std::uint64_t> ModMatrix::apply(std::span<const std::uint64_t> x) const {
  if (x.size() != cols_) throw std::invalid_argument("ModMatrix::apply: dimension mismatch");
  std::vector<std::uint64_t> y(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      const std::uint64_t a = (*this)(r, c);
      if (a != 0 && x[c] != 0) acc = (acc + mod_mul(a, x[c], modulus_)) % modulus_;
    }
    y[r] = acc;
  }
  return y;
}

ModularSmith::ModularSmith(ModMatrix a) : modulus_(a.modulus()), rows_(a.rows()), cols_(a.cols()) {
  diagonalize(a);
}

void ModularSmith::diagonalize(ModMatrix& a) {
  const std::uint64_t m = modulus_;
  const std::size_t steps = std::min(rows_, cols_);
  diag_.assign(steps, 0);

  auto row_swap = [&](std::size_t i, std::size_t j, std::size_t from) {
    if (i == j) return;
    for (std::size_t c = from; c < cols_; ++c) std::swap(a(i, c), a(j, c));
    row_ops_.push_back({OpKind::Swap, static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
  };
  auto col_swap = [&](std::size_t i, std::size_t j, std::size_t from) {
    if (i == j) return;
    for (std::size_t r = from; r < rows_; ++r) std::swap(a(r, i), a(r, j));
    col_ops_.push_back({OpKind::Swap, static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
  };
  // Eliminates entry (i, k) of column k against pivot row k, or the mirror
  // image (k, i) of row k against pivot column k.
  auto eliminate = [&](std::size_t k, std::size_t i, bool rows) {
    const std::uint64_t p = a(k, k);
    const std::uint64_t b = rows ? a(i, k) : a(k, i);
    Op op{};
    op.i = static_cast<std::uint32_t>(i);
    op.j = static_cast<std::uint32_t>(k);
    if (auto q = solve_scalar(p, b, m)) {
      op.kind = OpKind::AddMultiple;
      op.a = (m - *q) % m;
    } else {
      const auto e = ext_gcd(static_cast<std::int64_t>(p), static_cast<std::int64_t>(b));
      // (line_k, line_i) <- (s line_k + t line_i, -(b/g) line_k + (p/g) line_i)
      op.kind = OpKind::Mix;
      op.i = static_cast<std::uint32_t>(k);
      op.j = static_cast<std::uint32_t>(i);
      op.a = mod_reduce(e.s, m);
      op.b = mod_reduce(e.t, m);
      op.c = mod_reduce(-static_cast<std::int64_t>(b) / e.g, m);
      op.d = (p / static_cast<std::uint64_t>(e.g)) % m;
    }
    const std::size_t len = rows ? cols_ : rows_;
    auto at = [&](std::size_t line, std::size_t pos) -> std::uint64_t& { return rows ? a(line, pos) : a(pos, line); };
    for (std::size_t pos = k; pos < len; ++pos) {
      if (op.kind == OpKind::AddMultiple) {
        const std::uint64_t src = at(op.j, pos);
        if (src != 0) at(op.i, pos) = (at(op.i, pos) + mod_mul(op.a, src, m)) % m;
      } else {
        const std::uint64_t x = at(op.i, pos), y = at(op.j, pos);
        if (x == 0 && y == 0) continue;
        at(op.i, pos) = (mod_mul(op.a, x, m) + mod_mul(op.b, y, m)) % m;
        at(op.j, pos) = (mod_mul(op.c, x, m) + mod_mul(op.d, y, m)) % m;
      }
    }
    (rows ? row_ops_ : col_ops_).push_back(op);
  };

  for (std::size_t k = 0; k < steps; ++k) {
    std::size_t best_r = rows_, best_c = cols_;
    std::uint64_t best_g = 0;
    for (std::size_t c = k; c < cols_ && best_g != 1; ++c) {
      for (std::size_t r = k; r < rows_; ++r) {
        const std::uint64_t v = a(r, c);
        if (v == 0) continue;
        const std::uint64_t g = std::gcd(v, m);
        if (best_r == rows_ || g < best_g) {
          best_r = r;
          best_c = c;
          best_g = g;
          if (g == 1) break;
        }
      }
    }
    if (best_r == rows_) break;  // remaining block is zero
    row_swap(k, best_r, k);
    col_swap(k, best_c, k);

    for (;;) {
      for (std::size_t i = k + 1; i < rows_; ++i)
        if (a(i, k) != 0) eliminate(k, i, true);
      for (std::size_t j = k + 1; j < cols_; ++j)
        if (a(k, j) != 0) eliminate(k, j, false);
      bool column_clear = true;
      for (std::size_t i = k + 1; i < rows_ && column_clear; ++i) column_clear = a(i, k) == 0;
      if (column_clear) break;
    }
    diag_[k] = a(k, k);
  }
}

std::uint64_t ModularSmith::row_image_gcd(std::size_t i) const {
  if (i < diag_.size()) return std::gcd(diag_[i], modulus_);
  return modulus_;
}

void ModularSmith::apply_row_transform(std::span<std::uint64_t> v) const {
  if (v.size() != rows_) throw std::invalid_argument("apply_row_transform: dimension mismatch");
  const std::uint64_t m = modulus_;
  for (const auto& op : row_ops_) {
    switch (op.kind) {
      case OpKind::Swap:
        std::swap(v[op.i], v[op.j]);
        break;
      case OpKind::AddMultiple:
        v[op.i] = (v[op.i] + mod_mul(op.a, v[op.j], m)) % m;
        break;
      case OpKind::Mix: {
        const std::uint64_t x = v[op.i], y = v[op.j];
        v[op.i] = (mod_mul(op.a, x, m) + mod_mul(op.b, y, m)) % m;
        v[op.j] = (mod_mul(op.c, x, m) + mod_mul(op.d, y, m)) % m;
        break;
      }
    }
  }
}

void ModularSmith::apply_column_transform(std::span<std::uint64_t> y) const {
  if (y.size() != cols_) throw std::invalid_argument("apply_column_transform: dimension mismatch");
  const std::uint64_t m = modulus_;
  for (auto it = col_ops_.rbegin(); it != col_ops_.rend(); ++it) {
    const auto& op = *it;
    switch (op.kind) {
      case OpKind::Swap:
        std::swap(y[op.i], y[op.j]);
        break;
      case OpKind::AddMultiple:
        // col_i += a col_j  =>  (C y)_j += a y_i
        y[op.j] = (y[op.j] + mod_mul(op.a, y[op.i], m)) % m;
        break;
      case OpKind::Mix: {
        const std::uint64_t x = y[op.i], z = y[op.j];
        y[op.i] = (mod_mul(op.a, x, m) + mod_mul(op.c, z, m)) % m;
        y[op.j] = (mod_mul(op.b, x, m) + mod_mul(op.d, z, m)) % m;
        break;
      }
    }
  }
}

std::optional<std::vector<std::uint64_t>> ModularSmith::solve(std::span<const std::uint64_t> b) const {
  std::vector<std::uint64_t> v(b.begin(), b.end());
  for (auto& x : v) x %= modulus_;
  apply_row_transform(v);
  std::vector<std::uint64_t> y(cols_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i < diag_.size()) {
      auto yi = solve_scalar(diag_[i], v[i], modulus_);
      if (!yi) return std::nullopt;
      y[i] = *yi;
    } else if (v[i] != 0) {
      return std::nullopt;
    }
  }
  apply_column_transform(y);
  return y;
}

std::vector<std::vector<std::uint64_t>> ModularSmith::kernel_generators() const {
  std::vector<std::vector<std::uint64_t>> gens;
  for (std::size_t i = 0; i < cols_; ++i) {
    const std::uint64_t g = i < diag_.size() ? std::gcd(diag_[i], modulus_) : modulus_;
    const std::uint64_t scale = modulus_ / g;
    if (scale == modulus_) continue;  // unit pivot: no kernel in this coordinate
    std::vector<std::uint64_t> y(cols_, 0);
    y[i] = scale % modulus_;
    apply_column_transform(y);
    gens.push_back(std::move(y));
  }
  return gens;
}

}  // namespace fuscat
