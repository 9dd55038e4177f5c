#include "k3pencil/exactmath/ratfunc.hpp"

#include <stdexcept>

namespace k3pencil {

RatFunc::RatFunc(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = UPoly(1);
    return;
  }
  if (den_.is_constant()) {
    if (!den_.is_one()) {
      num_ *= Rat(1 / den_.lead());
      den_ = UPoly(1);
    }
    return;
  }
  UPoly g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = num_.divide_exact(g);
    den_ = den_.divide_exact(g);
  }
  if (den_.lead() != 1) {
    Rat inv = 1 / den_.lead();
    num_ *= inv;
    den_ *= inv;
  }
}

Rat RatFunc::constant_value() const {
  if (!is_constant()) throw std::logic_error("not a constant: " + to_string());
  return num_.coeff(0);
}

RatFunc RatFunc::operator-() const {
  RatFunc r(*this);
  r.num_ = -r.num_;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_one()) normalize();
    else if (num_.is_zero()) den_ = UPoly(1);
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) {
    *this = RatFunc();
    return *this;
  }
  if (o.is_constant()) {
    num_ *= o.num_.coeff(0);
    return *this;
  }
  if (is_constant()) {
    Rat c = num_.coeff(0);
    *this = o;
    num_ *= c;
    return *this;
  }
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in Q(s)");
  if (is_constant()) return RatFunc(Rat(1 / num_.coeff(0)));
  return RatFunc(den_, num_);
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

Rat RatFunc::eval(const Rat& s0) const {
  Rat d = den_.eval(s0);
  if (d == 0) throw std::domain_error("pole at specialization s=" + s0.get_str());
  return num_.eval(s0) / d;
}

std::string RatFunc::to_string() const {
  if (den_.is_one()) return num_.to_string();
  std::string n = num_.to_string();
  if (num_.degree() > 0) n = "(" + n + ")";
  return n + "/(" + den_.to_string() + ")";
}

}  // namespace k3pencil
