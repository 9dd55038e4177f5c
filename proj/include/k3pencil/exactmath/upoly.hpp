#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace k3pencil {

using BigInt = mpz_class;
using Rat = mpq_class;

/// Render a rational as "p" or "p/q".
std::string to_string(const Rat& r);
std::string to_string(const BigInt& z);

/// Parse "p" or "p/q" (the inverse of to_string); throws std::invalid_argument.
Rat parse_rat(std::string_view text);

/**
 * Dense univariate polynomial over Q in the pencil parameter s.
 *
 * Coefficient i multiplies s^i. The coefficient vector never ends in a zero,
 * so the zero polynomial is the empty vector and degree() is -1.
 */
class UPoly {
 public:
  UPoly() = default;
  UPoly(const Rat& c);  // NOLINT(google-explicit-constructor)
  UPoly(long c);        // NOLINT(google-explicit-constructor)
  explicit UPoly(std::vector<Rat> coeffs);

  /// c * s^deg
  static UPoly monomial(const Rat& c, int deg);
  static UPoly s() { return monomial(Rat(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  const Rat& coeff(int i) const;
  const Rat& lead() const;
  const std::vector<Rat>& coeffs() const { return c_; }

  UPoly operator-() const;
  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const Rat& c);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(UPoly a, const Rat& c) { return a *= c; }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  /// Euclidean division a = q*b + r with deg r < deg b. b must be nonzero.
  static void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
  /// Quotient of an exact division; throws std::domain_error on remainder.
  UPoly divide_exact(const UPoly& b) const;

  UPoly monic() const;
  UPoly derivative() const;
  Rat eval(const Rat& x) const;

  std::string to_string(std::string_view var = "s") const;

 private:
  void trim();
  std::vector<Rat> c_;
};

/// Monic gcd; gcd(0,0) = 0.
UPoly gcd(UPoly a, UPoly b);

}  // namespace k3pencil
