#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "k3pencil/exactmath/ratfunc.hpp"

namespace k3pencil {

/// Which quadratic extension alpha lives in. The tower is fixed-depth:
/// Q ⊂ Q(s) ⊂ Q(s)(alpha) with alpha^2 one of two supported values.
enum class AlphaSquare : std::uint8_t { none, s2_minus_s, two };

enum class FieldLevel : std::uint8_t { rational, rational_function, quadratic_extension };

struct FieldDescriptor {
  FieldLevel level = FieldLevel::rational;
  AlphaSquare alpha_square = AlphaSquare::none;
  friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;
};

/// alpha^2 as an element of Q(s); throws for AlphaSquare::none.
RatFunc alpha_square_value(AlphaSquare kind);
std::string to_string(AlphaSquare kind);

/**
 * Element a + b*alpha of the coefficient tower.
 *
 * Elements of Q or Q(s) carry b == 0. Mixing elements that live in two
 * different quadratic extensions throws std::logic_error.
 */
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(long c) : a_(c) {}                 // NOLINT(google-explicit-constructor)
  FieldElem(const Rat& c) : a_(c) {}           // NOLINT(google-explicit-constructor)
  FieldElem(RatFunc a) : a_(std::move(a)) {}   // NOLINT(google-explicit-constructor)
  FieldElem(RatFunc a, RatFunc b, AlphaSquare kind);

  static FieldElem s() { return FieldElem(RatFunc::s()); }
  static FieldElem alpha(AlphaSquare kind) { return FieldElem(RatFunc(), RatFunc(1), kind); }

  const RatFunc& a() const { return a_; }
  const RatFunc& b() const { return b_; }
  AlphaSquare alpha_kind() const { return kind_; }
  FieldDescriptor descriptor() const;

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_one() const { return a_.is_one() && b_.is_zero(); }
  /// True when the element is a rational constant.
  bool is_rational() const { return b_.is_zero() && a_.is_constant(); }
  Rat rational_value() const;

  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);
  FieldElem& operator/=(const FieldElem& o);
  friend FieldElem operator+(FieldElem x, const FieldElem& y) { return x += y; }
  friend FieldElem operator-(FieldElem x, const FieldElem& y) { return x -= y; }
  friend FieldElem operator*(FieldElem x, const FieldElem& y) { return x *= y; }
  friend FieldElem operator/(FieldElem x, const FieldElem& y) { return x /= y; }
  friend bool operator==(const FieldElem& x, const FieldElem& y);

  FieldElem inverse() const;
  /// a - b*alpha
  FieldElem conjugate() const;
  /// (a + b alpha)(a - b alpha) in Q(s)
  RatFunc norm() const;

  std::string to_string() const;

 private:
  void absorb_kind(AlphaSquare other);
  RatFunc a_;
  RatFunc b_;
  AlphaSquare kind_ = AlphaSquare::none;
};

/**
 * Evaluate at s = s0.
 *
 * The alpha part maps to alpha0 when given (alpha0^2 must equal
 * alpha^2(s0) exactly). Without alpha0, alpha survives only if
 * alpha^2(s0) == 2, in which case the result lives in Q(alpha), alpha^2 = 2.
 * Throws std::domain_error on poles or inconsistent alpha values.
 */
FieldElem specialize(const FieldElem& e, const Rat& s0, const std::optional<Rat>& alpha0 = std::nullopt);

}  // namespace k3pencil
