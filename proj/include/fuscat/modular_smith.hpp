#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace fuscat {

/// Dense integer matrix with entries reduced modulo a fixed modulus.
class ModMatrix {
 public:
  ModMatrix(std::size_t rows, std::size_t cols, std::uint64_t modulus);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint64_t modulus() const { return modulus_; }

  std::uint64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::uint64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Adds `delta` (any integer) to an entry, reducing modulo the modulus.
  void add(std::size_t r, std::size_t c, std::int64_t delta);

  std::vector<std::uint64_t> apply(std::span<const std::uint64_t> x) const;

 private:
  std::size_t rows_, cols_;
  std::uint64_t modulus_;
  std::vector<std::uint64_t> data_;
};

/// Smith-type diagonalization R * A * C = D over Z/m, where R and C are
/// products of integer-unimodular elementary operations and D is diagonal.
///
/// The diagonal is not normalized to a divisibility chain; it is exactly
/// what linear solving and kernel computations over Z/m need. R and C are
/// kept as operation logs and replayed on vectors on demand.
class ModularSmith {
 public:
  explicit ModularSmith(ModMatrix a);

  std::uint64_t modulus() const { return modulus_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  /// Diagonal entries d_0..d_{min(rows,cols)-1} (zero entries included).
  const std::vector<std::uint64_t>& diagonal() const { return diag_; }

  /// gcd(d_i, m) for row i of D, with m for rows past the diagonal. The
  /// image of A, in R-coordinates, is exactly the vectors whose i-th entry
  /// is a multiple of this value.
  std::uint64_t row_image_gcd(std::size_t i) const;

  /// v <- R v (length rows()).
  void apply_row_transform(std::span<std::uint64_t> v) const;
  /// y <- C y (length cols()).
  void apply_column_transform(std::span<std::uint64_t> y) const;

  /// Some x with A x = b (mod m), or nullopt when the system is inconsistent.
  std::optional<std::vector<std::uint64_t>> solve(std::span<const std::uint64_t> b) const;

  /// Generators of {x : A x = 0 (mod m)} as a Z/m-module.
  std::vector<std::vector<std::uint64_t>> kernel_generators() const;

 private:
  enum class OpKind : std::uint8_t { Swap, AddMultiple, Mix };
  struct Op {
    OpKind kind;
    std::uint32_t i, j;
    // AddMultiple: line_i += a * line_j.
    // Mix: (line_i, line_j) <- (a line_i + b line_j, c line_i + d line_j), ad - bc = 1.
    std::uint64_t a = 0, b = 0, c = 0, d = 0;
  };

  void diagonalize(ModMatrix& a);

  std::uint64_t modulus_;
  std::size_t rows_, cols_;
  std::vector<std::uint64_t> diag_;
  std::vector<Op> row_ops_;
  std::vector<Op> col_ops_;
};

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t mod_reduce(std::int64_t a, std::uint64_t m);

/// Solves d*y = c (mod m); nullopt if gcd(d, m) does not divide c.
std::optional<std::uint64_t> solve_scalar(std::uint64_t d, std::uint64_t c, std::uint64_t m);

}  // namespace fuscat
