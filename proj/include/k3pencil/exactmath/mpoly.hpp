#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "k3pencil/exactmath/field.hpp"

namespace k3pencil {

inline constexpr std::size_t kMaxVars = 6;

struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};

  unsigned degree() const {
    unsigned d = 0;
    for (auto e : exp) d += e;
    return d;
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;
  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  /// o / *this; requires divides(o)
  Monomial quotient_of(const Monomial& o) const;
};

/// Graded lexicographic order, first declared variable largest.
bool grlex_less(const Monomial& a, const Monomial& b);
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(b, a); }
};

/**
 * Multivariate polynomial over the coefficient tower.
 *
 * Terms are kept sorted by descending grlex with no zero coefficients, so two
 * polynomials over the same variable list are equal iff their term vectors
 * are. Arithmetic between polynomials requires identical variable lists.
 */
class MPoly {
 public:
  using Term = std::pair<Monomial, FieldElem>;

  MPoly() = default;
  explicit MPoly(std::vector<std::string> vars);

  static MPoly constant(std::vector<std::string> vars, const FieldElem& c);
  static MPoly variable(std::vector<std::string> vars, std::string_view name);
  static MPoly term(std::vector<std::string> vars, const Monomial& m, const FieldElem& c);

  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  std::size_t var_index(std::string_view name) const;
  bool has_var(std::string_view name) const;

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Value of a constant polynomial (zero for the zero polynomial).
  FieldElem constant_value() const;
  const Monomial& lead_monomial() const { return terms_.front().first; }
  const FieldElem& lead_coeff() const { return terms_.front().second; }
  FieldElem coeff(const Monomial& m) const;

  int total_degree() const;
  int degree_in(std::size_t var) const;
  bool is_homogeneous() const;
  /// Indices of variables that actually occur.
  std::vector<std::size_t> support() const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const FieldElem& c);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const FieldElem& c) { return a *= c; }
  friend MPoly operator*(const FieldElem& c, MPoly a) { return a *= c; }
  friend bool operator==(const MPoly& a, const MPoly& b);
  MPoly pow(unsigned e) const;

  MPoly derivative(std::size_t var) const;
  /// Divide every coefficient by the leading coefficient.
  MPoly monic() const;

  /// Substitute every variable by a polynomial over a common target ring.
  MPoly compose(std::span<const MPoly> values) const;
  /// Replace one variable by a polynomial in the same ring.
  MPoly substitute_var(std::size_t var, const MPoly& value) const;
  FieldElem eval(std::span<const FieldElem> point) const;
  /// Fix some variables to values and drop them from the variable list.
  /// values[i] == nullopt keeps variable i.
  MPoly restrict(std::span<const std::optional<FieldElem>> values) const;
  /// Same polynomial written over a different variable list (by name).
  MPoly in_ring(const std::vector<std::string>& vars) const;
  /// Coefficients c_0..c_d of the expansion in powers of `var`; each c_i has
  /// the same variable list with `var` absent from its support.
  std::vector<MPoly> coefficients_in(std::size_t var) const;

  /// Exact quotient; throws std::domain_error when b does not divide *this.
  MPoly divide_exact(const MPoly& b) const;
  /// Quotient when b divides *this, otherwise nullopt.
  std::optional<MPoly> try_divide(const MPoly& b) const;

  /// Apply a coefficient map (e.g. specialization); zero results are dropped.
  template <class F>
  MPoly map_coeffs(F&& f) const {
    MPoly r(vars_);
    for (const auto& [m, c] : terms_) {
      FieldElem v = f(c);
      if (!v.is_zero()) r.terms_.emplace_back(m, std::move(v));
    }
    return r;
  }

  std::string to_string() const;

 private:
  void check_ring(const MPoly& o) const;
  std::vector<std::string> vars_;
  std::vector<Term> terms_;
};

/// Rational function num/den of multivariate polynomials (not reduced).
struct PolyFraction {
  MPoly num;
  MPoly den;

  static PolyFraction of(const MPoly& p);
  PolyFraction operator+(const PolyFraction& o) const;
  PolyFraction operator-(const PolyFraction& o) const;
  PolyFraction operator*(const PolyFraction& o) const;
  PolyFraction operator/(const PolyFraction& o) const;
  /// num*o.den - o.num*den, zero iff the fractions are equal.
  MPoly cross_residual(const PolyFraction& o) const;
  bool equals(const PolyFraction& o) const { return cross_residual(o).is_zero(); }
};

}  // namespace k3pencil
