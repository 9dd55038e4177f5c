#pragma once

#include "k3pencil/exactmath/upoly.hpp"

namespace k3pencil {

/**
 * Element of Q(s): a reduced fraction num/den with den monic.
 *
 * Reduced form makes equality syntactic. Constants keep den == 1 and never
 * touch the polynomial gcd.
 */
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(const Rat& c) : num_(c), den_(1) {}    // NOLINT(google-explicit-constructor)
  RatFunc(long c) : num_(c), den_(1) {}          // NOLINT(google-explicit-constructor)
  RatFunc(UPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(UPoly num, UPoly den);

  static RatFunc s() { return RatFunc(UPoly::s()); }

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const { return den_.is_one() && num_.is_constant(); }
  bool is_polynomial() const { return den_.is_one(); }
  /// Only valid when is_constant().
  Rat constant_value() const;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RatFunc inverse() const;

  /// Exact evaluation at s = s0; throws std::domain_error("pole at specialization").
  Rat eval(const Rat& s0) const;

  std::string to_string() const;

 private:
  void normalize();
  UPoly num_;
  UPoly den_{1};
};

}  // namespace k3pencil
