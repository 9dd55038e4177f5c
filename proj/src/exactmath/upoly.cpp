#include "k3pencil/exactmath/upoly.hpp"

#include <stdexcept>

namespace k3pencil {

std::string to_string(const Rat& r) { return r.get_str(); }
std::string to_string(const BigInt& z) { return z.get_str(); }

Rat parse_rat(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    bool ok = (c >= '0' && c <= '9') || c == '/' || (i == 0 && (c == '-' || c == '+'));
    if (!ok) throw std::invalid_argument("malformed rational: " + s);
  }
  if (s[0] == '+') s.erase(0, 1);
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

namespace {
const Rat& zero_rat() {
  static const Rat z(0);
  return z;
}
}  // namespace

UPoly::UPoly(const Rat& c) {
  if (c != 0) {
    c_.push_back(c);
    c_.back().canonicalize();
  }
}

UPoly::UPoly(long c) {
  if (c != 0) c_.emplace_back(c);
}

UPoly::UPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
  // mpq_class(p, q) does not reduce; every stored coefficient must be canonical.
  for (auto& c : c_) c.canonicalize();
  trim();
}

UPoly UPoly::monomial(const Rat& c, int deg) {
  UPoly p;
  if (c == 0) return p;
  p.c_.assign(static_cast<std::size_t>(deg) + 1, Rat(0));
  p.c_[deg] = c;
  return p;
}

const Rat& UPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return zero_rat();
  return c_[i];
}

const Rat& UPoly::lead() const {
  if (c_.empty()) return zero_rat();
  return c_.back();
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::operator-() const {
  UPoly r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const Rat& c) {
  if (c == 0) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= c;
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  UPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Rat(0));
  Rat t;
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      t = a.c_[i] * b.c_[j];
      r.c_[i + j] += t;
    }
  }
  r.trim();
  return r;
}

void UPoly::divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  r = a;
  q = UPoly();
  int db = b.degree();
  if (r.degree() < db) return;
  q.c_.assign(static_cast<std::size_t>(r.degree() - db) + 1, Rat(0));
  Rat inv = 1 / b.lead();
  while (!r.is_zero() && r.degree() >= db) {
    int shift = r.degree() - db;
    Rat f = r.lead() * inv;
    q.c_[shift] = f;
    for (int i = 0; i <= db; ++i) r.c_[i + shift] -= f * b.c_[i];
    r.trim();
  }
  q.trim();
}

UPoly UPoly::divide_exact(const UPoly& b) const {
  UPoly q, r;
  divmod(*this, b, q, r);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  UPoly r(*this);
  Rat inv = 1 / lead();
  for (auto& c : r.c_) c *= inv;
  return r;
}

UPoly UPoly::derivative() const {
  UPoly r;
  if (c_.size() <= 1) return r;
  r.c_.resize(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * static_cast<long>(i);
  r.trim();
  return r;
}

Rat UPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

std::string UPoly::to_string(std::string_view var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rat& c = c_[i];
    if (c == 0) continue;
    bool neg = c < 0;
    Rat a = neg ? Rat(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? "-" : "+";
    }
    if (i == 0) {
      out += a.get_str();
      continue;
    }
    if (a != 1) out += a.get_str() + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly q, r;
    UPoly::divmod(a, b, q, r);
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

}  // namespace k3pencil
