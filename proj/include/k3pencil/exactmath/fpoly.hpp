#pragma once

#include <string>
#include <vector>

#include "k3pencil/exactmath/mpoly.hpp"

namespace k3pencil {

/**
 * Dense univariate polynomial with coefficients in the tower.
 *
 * Used as the working representation for gcds, squarefree decompositions
 * and univariate resultants; MPoly is the interchange format.
 */
class FPoly {
 public:
  FPoly() = default;
  FPoly(FieldElem c);  // NOLINT(google-explicit-constructor)
  explicit FPoly(std::vector<FieldElem> coeffs);
  static FPoly x() { return FPoly(std::vector<FieldElem>{FieldElem(0), FieldElem(1)}); }
  /// x - root
  static FPoly linear(const FieldElem& root);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const FieldElem& coeff(int i) const;
  const FieldElem& lead() const { return c_.back(); }
  const std::vector<FieldElem>& coeffs() const { return c_; }

  FPoly operator-() const;
  FPoly& operator+=(const FPoly& o);
  FPoly& operator-=(const FPoly& o);
  friend FPoly operator+(FPoly a, const FPoly& b) { return a += b; }
  friend FPoly operator-(FPoly a, const FPoly& b) { return a -= b; }
  friend FPoly operator*(const FPoly& a, const FPoly& b);
  friend FPoly operator*(FPoly a, const FieldElem& c);
  friend bool operator==(const FPoly& a, const FPoly& b);

  static void divmod(const FPoly& a, const FPoly& b, FPoly& q, FPoly& r);
  FPoly rem(const FPoly& b) const;
  FPoly divide_exact(const FPoly& b) const;
  FPoly monic() const;
  FPoly derivative() const;
  FieldElem eval(const FieldElem& x) const;
  /// Order of vanishing at x = 0.
  int low_order() const;
  FPoly pow(unsigned e) const;

  std::string to_string(std::string_view var = "t") const;

 private:
  void trim();
  std::vector<FieldElem> c_;
};

/// Monic gcd; gcd(0,0) = 0.
FPoly gcd(FPoly a, FPoly b);
/// Resultant by the Euclidean recurrence over the coefficient field.
FieldElem resultant(const FPoly& a, const FPoly& b);
/// Newton interpolation through (xs[i], ys[i]); xs pairwise distinct.
FPoly interpolate(const std::vector<FieldElem>& xs, const std::vector<FieldElem>& ys);

/// View a polynomial whose support is within {var} as dense univariate.
FPoly to_fpoly(const MPoly& p, std::size_t var);
/// Embed a univariate polynomial as a polynomial in variable `var` of `vars`.
MPoly from_fpoly(const FPoly& p, const std::vector<std::string>& vars, std::size_t var);

}  // namespace k3pencil
