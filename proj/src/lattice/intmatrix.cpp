// Copyright (c) k3pencil contributors. Licensed under the Apache License, Version 2.0.
#include "k3pencil/lattice/intmatrix.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

namespace k3pencil {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  r_ = rows.size();
  c_ = r_ ? rows.begin()->size() : 0;
  for (const auto& row : rows) {
    if (row.size() != c_) throw std::invalid_argument("ragged matrix");
    for (long v : row) a_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < m.r_; ++i) {
    if (rows[i].size() != m.c_) throw std::invalid_argument("ragged matrix");
    for (std::size_t j = 0; j < m.c_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.c_ != b.r_) throw std::invalid_argument("matrix dimension mismatch");
  IntMatrix p(a.r_, b.c_);
  for (std::size_t i = 0; i < a.r_; ++i)
    for (std::size_t k = 0; k < a.c_; ++k) {
      const BigInt& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.c_; ++j) p(i, j) += x * b(k, j);
    }
  return p;
}

bool IntMatrix::is_symmetric() const {
  if (r_ != c_) return false;
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = i + 1; j < c_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < c_; ++k) std::swap((*this)(i, k), (*this)(j, k));
}
void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < r_; ++k) std::swap((*this)(k, i), (*this)(k, j));
}
void IntMatrix::add_row(std::size_t i, std::size_t j, const BigInt& k) {
  if (k == 0) return;
  for (std::size_t c = 0; c < c_; ++c) (*this)(i, c) += k * (*this)(j, c);
}
void IntMatrix::add_col(std::size_t i, std::size_t j, const BigInt& k) {
  if (k == 0) return;
  for (std::size_t r = 0; r < r_; ++r) (*this)(r, i) += k * (*this)(r, j);
}
void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t c = 0; c < c_; ++c) (*this)(i, c) = -(*this)(i, c);
}
void IntMatrix::negate_col(std::size_t i) {
  for (std::size_t r = 0; r < r_; ++r) (*this)(r, i) = -(*this)(r, i);
}

IntMatrix IntMatrix::columns(std::size_t from, std::size_t to) const {
  IntMatrix m(r_, to - from);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = from; j < to; ++j) m(i, j - from) = (*this)(i, j);
  return m;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < r_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < c_; ++j) os << (j ? ", " : "") << (*this)(i, j).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

BigInt determinant(const IntMatrix& m0) {
  if (m0.rows() != m0.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m0.rows();
  if (n == 0) return 1;
  IntMatrix m = m0;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& m) { return column_reduce(m).nonzero; }

std::vector<std::vector<Rat>> rational_inverse(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw std::domain_error("singular matrix");
    std::swap(a[p], a[c]);
    Rat inv = 1 / a[c][c];
    for (auto& v : a[c]) v *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

ColumnReduction column_reduce(const IntMatrix& m0) {
  IntMatrix m = m0;
  ColumnReduction out;
  out.V = IntMatrix::identity(m.cols());
  std::size_t piv_col = 0;
  for (std::size_t r = 0; r < m.rows() && piv_col < m.cols(); ++r) {
    // Euclid on row r across the columns piv_col.. until one nonzero remains.
    while (true) {
      std::size_t best = m.cols();
      for (std::size_t j = piv_col; j < m.cols(); ++j)
        if (m(r, j) != 0 && (best == m.cols() || abs(m(r, j)) < abs(m(r, best)))) best = j;
      if (best == m.cols()) break;
      m.swap_cols(piv_col, best);
      out.V.swap_cols(piv_col, best);
      bool done = true;
      for (std::size_t j = piv_col + 1; j < m.cols(); ++j) {
        if (m(r, j) == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), m(r, j).get_mpz_t(), m(r, piv_col).get_mpz_t());
        m.add_col(j, piv_col, -q);
        out.V.add_col(j, piv_col, -q);
        if (m(r, j) != 0) done = false;
      }
      if (done) {
        ++piv_col;
        break;
      }
    }
  }
  out.nonzero = piv_col;
  return out;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithForm s;
  s.D = m;
  s.U = IntMatrix::identity(m.rows());
  s.U_inverse = IntMatrix::identity(m.rows());
  s.V = IntMatrix::identity(m.cols());
  IntMatrix& D = s.D;
  auto row_add = [&](std::size_t i, std::size_t j, const BigInt& k) {
    D.add_row(i, j, k);
    s.U.add_row(i, j, k);
    s.U_inverse.add_col(j, i, -k);
  };
  auto row_swap = [&](std::size_t i, std::size_t j) {
    D.swap_rows(i, j);
    s.U.swap_rows(i, j);
    s.U_inverse.swap_cols(i, j);
  };
  auto col_add = [&](std::size_t i, std::size_t j, const BigInt& k) {
    D.add_col(i, j, k);
    s.V.add_col(i, j, k);
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    D.swap_cols(i, j);
    s.V.swap_cols(i, j);
  };
  const std::size_t n = std::min(D.rows(), D.cols());
  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      std::size_t bi = D.rows(), bj = 0;
      for (std::size_t i = t; i < D.rows(); ++i)
        for (std::size_t j = t; j < D.cols(); ++j)
          if (D(i, j) != 0 && (bi == D.rows() || abs(D(i, j)) < abs(D(bi, bj)))) bi = i, bj = j;
      if (bi == D.rows()) goto finished;
      row_swap(t, bi);
      col_swap(t, bj);
      bool clean = true;
      for (std::size_t i = t + 1; i < D.rows(); ++i) {
        if (D(i, t) == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), D(i, t).get_mpz_t(), D(t, t).get_mpz_t());
        row_add(i, t, -q);
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < D.cols(); ++j) {
        if (D(t, j) == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), D(t, j).get_mpz_t(), D(t, t).get_mpz_t());
        col_add(j, t, -q);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: fold an offending row into row t and start over.
      bool divides = true;
      for (std::size_t i = t + 1; i < D.rows() && divides; ++i)
        for (std::size_t j = t + 1; j < D.cols(); ++j)
          if (D(i, j) % D(t, t) != 0) {
            row_add(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (D(t, t) < 0) {
      D.negate_row(t);
      s.U.negate_row(t);
      s.U_inverse.negate_col(t);
    }
  }
finished:
  for (std::size_t t = 0; t < n; ++t) s.diagonal.push_back(D(t, t));
  return s;
}

IntMatrix random_unimodular(std::size_t n, std::uint64_t seed, int steps) {
  std::mt19937_64 rng(seed);
  IntMatrix m = IntMatrix::identity(n);
  if (n < 2) return m;
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<long> mult(-2, 2);
  for (int s = 0; s < steps; ++s) {
    std::size_t i = idx(rng), j = idx(rng);
    if (i == j) continue;
    m.add_col(i, j, mult(rng));
    if (s % 7 == 0) m.swap_cols(i, j);
  }
  return m;
}

}  // namespace k3pencil
