#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "k3pencil/exactmath/upoly.hpp"

namespace k3pencil {

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<int>>& rows);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  BigInt& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  IntMatrix transpose() const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;
  bool is_symmetric() const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  /// row i += k * row j
  void add_row(std::size_t i, std::size_t j, const BigInt& k);
  /// col i += k * col j
  void add_col(std::size_t i, std::size_t j, const BigInt& k);
  void negate_row(std::size_t i);
  void negate_col(std::size_t i);

  /// Columns [from, to) as a new matrix.
  IntMatrix columns(std::size_t from, std::size_t to) const;

  std::string to_string() const;

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<BigInt> a_;
};

/// Exact determinant (fraction-free Bareiss elimination).
BigInt determinant(const IntMatrix& m);
/// Rank over Q.
std::size_t rank(const IntMatrix& m);

/// Square rational matrix inverse; throws std::domain_error if singular.
std::vector<std::vector<Rat>> rational_inverse(const IntMatrix& m);

/**
 * Column reduction: returns unimodular V with M*V = [H | 0], where H has
 * full column rank. The number of nonzero columns is `nonzero`.
 */
struct ColumnReduction {
  IntMatrix V;
  std::size_t nonzero = 0;
};
ColumnReduction column_reduce(const IntMatrix& m);

/// U * M * V = D (diagonal, d_1 | d_2 | ..., nonnegative), U and V unimodular.
struct SmithForm {
  IntMatrix U, V, D;
  IntMatrix U_inverse;
  std::vector<BigInt> diagonal;
};
SmithForm smith_normal_form(const IntMatrix& m);

/// Product of `steps` random elementary operations with a fixed seed.
IntMatrix random_unimodular(std::size_t n, std::uint64_t seed, int steps = 40);

}  // namespace k3pencil
