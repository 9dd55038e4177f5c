#include "k3pencil/exactmath/field.hpp"

#include <stdexcept>

namespace k3pencil {

RatFunc alpha_square_value(AlphaSquare kind) {
  switch (kind) {
    case AlphaSquare::s2_minus_s:
      return RatFunc(UPoly(std::vector<Rat>{Rat(0), Rat(-1), Rat(1)}));
    case AlphaSquare::two:
      return RatFunc(2);
    case AlphaSquare::none:
      break;
  }
  throw std::logic_error("alpha is undefined below the top of the tower");
}

std::string to_string(AlphaSquare kind) {
  switch (kind) {
    case AlphaSquare::s2_minus_s:
      return "s^2-s";
    case AlphaSquare::two:
      return "2";
    case AlphaSquare::none:
      break;
  }
  return "none";
}

FieldElem::FieldElem(RatFunc a, RatFunc b, AlphaSquare kind)
    : a_(std::move(a)), b_(std::move(b)), kind_(kind) {
  if (kind_ == AlphaSquare::none && !b_.is_zero())
    throw std::logic_error("alpha coefficient without an extension");
}

FieldDescriptor FieldElem::descriptor() const {
  if (kind_ != AlphaSquare::none) return {FieldLevel::quadratic_extension, kind_};
  if (a_.is_constant()) return {FieldLevel::rational, AlphaSquare::none};
  return {FieldLevel::rational_function, AlphaSquare::none};
}

Rat FieldElem::rational_value() const {
  if (!is_rational()) throw std::logic_error("not a rational constant: " + to_string());
  return a_.constant_value();
}

void FieldElem::absorb_kind(AlphaSquare other) {
  if (other == AlphaSquare::none || other == kind_) return;
  if (kind_ == AlphaSquare::none) {
    kind_ = other;
    return;
  }
  throw std::logic_error("elements from incompatible quadratic extensions");
}

FieldElem FieldElem::operator-() const {
  FieldElem r(*this);
  r.a_ = -r.a_;
  if (!r.b_.is_zero()) r.b_ = -r.b_;
  return r;
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  absorb_kind(o.kind_);
  a_ += o.a_;
  if (!o.b_.is_zero()) b_ += o.b_;
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
  absorb_kind(o.kind_);
  a_ -= o.a_;
  if (!o.b_.is_zero()) b_ -= o.b_;
  return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& o) {
  absorb_kind(o.kind_);
  if (b_.is_zero() && o.b_.is_zero()) {
    a_ *= o.a_;
    return *this;
  }
  if (o.b_.is_zero()) {
    a_ *= o.a_;
    b_ *= o.a_;
    return *this;
  }
  if (b_.is_zero()) {
    b_ = a_ * o.b_;
    a_ *= o.a_;
    return *this;
  }
  RatFunc na = a_ * o.a_ + b_ * o.b_ * alpha_square_value(kind_);
  RatFunc nb = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

RatFunc FieldElem::norm() const {
  if (b_.is_zero()) return a_ * a_;
  return a_ * a_ - b_ * b_ * alpha_square_value(kind_);
}

FieldElem FieldElem::conjugate() const {
  FieldElem r(*this);
  if (!r.b_.is_zero()) r.b_ = -r.b_;
  return r;
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in the coefficient field");
  if (b_.is_zero()) {
    FieldElem r(*this);
    r.a_ = a_.inverse();
    return r;
  }
  RatFunc n = norm();
  if (n.is_zero()) throw std::domain_error("zero divisor: alpha^2 is a square here");
  RatFunc ninv = n.inverse();
  return FieldElem(a_ * ninv, -(b_ * ninv), kind_);
}

FieldElem& FieldElem::operator/=(const FieldElem& o) {
  if (o.b_.is_zero()) {
    if (o.a_.is_zero()) throw std::domain_error("division by zero in the coefficient field");
    absorb_kind(o.kind_);
    RatFunc inv = o.a_.inverse();
    a_ *= inv;
    if (!b_.is_zero()) b_ *= inv;
    return *this;
  }
  return *this *= o.inverse();
}

bool operator==(const FieldElem& x, const FieldElem& y) {
  if (!(x.a_ == y.a_) || !(x.b_ == y.b_)) return false;
  if (x.b_.is_zero()) return true;
  return x.kind_ == y.kind_;
}

std::string FieldElem::to_string() const {
  if (b_.is_zero()) return a_.to_string();
  std::string bs = b_.to_string();
  std::string out;
  if (!a_.is_zero()) out = a_.to_string() + "+";
  if (b_.is_one()) {
    out += "alpha";
  } else {
    out += "(" + bs + ")*alpha";
  }
  return out;
}

FieldElem specialize(const FieldElem& e, const Rat& s0, const std::optional<Rat>& alpha0) {
  Rat a0 = e.a().eval(s0);
  Rat b0 = e.b().is_zero() ? Rat(0) : e.b().eval(s0);
  if (e.alpha_kind() == AlphaSquare::none) return FieldElem(a0);
  Rat sq = alpha_square_value(e.alpha_kind()).eval(s0);
  if (alpha0) {
    if (*alpha0 * *alpha0 != sq)
      throw std::domain_error("alpha0^2 = " + Rat(*alpha0 * *alpha0).get_str() +
                              " is inconsistent with alpha^2 = " + sq.get_str());
    return FieldElem(Rat(a0 + b0 * *alpha0));
  }
  if (b0 == 0) return FieldElem(a0);
  if (sq == 2) return FieldElem(RatFunc(a0), RatFunc(b0), AlphaSquare::two);
  throw std::domain_error("alpha has no symbolic image at s=" + s0.get_str() +
                          " (alpha^2 = " + sq.get_str() + "); pass an explicit value");
}

}  // namespace k3pencil
