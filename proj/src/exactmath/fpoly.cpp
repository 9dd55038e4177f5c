#include "k3pencil/exactmath/fpoly.hpp"

#include <stdexcept>

namespace k3pencil {

namespace {
const FieldElem kZero{};
}

FPoly::FPoly(FieldElem c) {
  if (!c.is_zero()) c_.push_back(std::move(c));
}

FPoly::FPoly(std::vector<FieldElem> coeffs) : c_(std::move(coeffs)) { trim(); }

FPoly FPoly::linear(const FieldElem& root) { return FPoly(std::vector<FieldElem>{-root, FieldElem(1)}); }

void FPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const FieldElem& FPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[i];
}

FPoly FPoly::operator-() const {
  FPoly r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

FPoly& FPoly::operator+=(const FPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

FPoly& FPoly::operator-=(const FPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

FPoly operator*(const FPoly& a, const FPoly& b) {
  if (a.is_zero() || b.is_zero()) return FPoly();
  std::vector<FieldElem> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return FPoly(std::move(out));
}

FPoly operator*(FPoly a, const FieldElem& c) {
  if (c.is_zero()) return FPoly();
  for (auto& x : a.c_) x *= c;
  return a;
}

bool operator==(const FPoly& a, const FPoly& b) {
  if (a.c_.size() != b.c_.size()) return false;
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    if (!(a.c_[i] == b.c_[i])) return false;
  return true;
}

void FPoly::divmod(const FPoly& a, const FPoly& b, FPoly& q, FPoly& r) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  r = a;
  int db = b.degree();
  if (r.degree() < db) {
    q = FPoly();
    return;
  }
  std::vector<FieldElem> qc(r.degree() - db + 1);
  FieldElem inv = b.lead().inverse();
  while (!r.is_zero() && r.degree() >= db) {
    int shift = r.degree() - db;
    FieldElem f = r.lead() * inv;
    for (int i = 0; i <= db; ++i) r.c_[shift + i] -= f * b.c_[i];
    qc[shift] = f;
    r.trim();
  }
  q = FPoly(std::move(qc));
}

FPoly FPoly::rem(const FPoly& b) const {
  FPoly q, r;
  divmod(*this, b, q, r);
  return r;
}

FPoly FPoly::divide_exact(const FPoly& b) const {
  FPoly q, r;
  divmod(*this, b, q, r);
  if (!r.is_zero()) throw std::domain_error("inexact univariate division");
  return q;
}

FPoly FPoly::monic() const {
  if (is_zero()) return *this;
  return *this * lead().inverse();
}

FPoly FPoly::derivative() const {
  std::vector<FieldElem> out;
  for (std::size_t i = 1; i < c_.size(); ++i) out.push_back(c_[i] * FieldElem(long(i)));
  return FPoly(std::move(out));
}

FieldElem FPoly::eval(const FieldElem& x) const {
  FieldElem acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int FPoly::low_order() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return int(i);
  return -1;
}

FPoly FPoly::pow(unsigned e) const {
  FPoly r(FieldElem(1)), b = *this;
  while (e) {
    if (e & 1u) r = r * b;
    e >>= 1u;
    if (e) b = b * b;
  }
  return r;
}

std::string FPoly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::vector<std::string> vars{std::string(var)};
  return from_fpoly(*this, vars, 0).to_string();
}

namespace {

// Primitive polynomial remainder sequences over Z and over Q[s]. Plain
// Euclid over the fraction field blows up coefficient sizes badly.

struct IntDomain {
  using T = BigInt;
  static bool zero(const T& x) { return x == 0; }
  static T mul(const T& a, const T& b) { return a * b; }
  static T sub(const T& a, const T& b) { return a - b; }
  static T gcd(const T& a, const T& b) {
    T g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
  }
  static T div(const T& a, const T& b) {
    T q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
  static bool is_unit(const T& g) { return g == 1 || g == -1; }
  /// Unit making the leading coefficient canonical.
  static T normalizer(const T& lead) { return lead < 0 ? T(-1) : T(1); }
};

struct PolyDomain {
  using T = UPoly;
  static bool zero(const T& x) { return x.is_zero(); }
  static T mul(const T& a, const T& b) { return a * b; }
  static T sub(const T& a, const T& b) { return a - b; }
  static T gcd(const T& a, const T& b) { return k3pencil::gcd(a, b); }
  static T div(const T& a, const T& b) { return a.divide_exact(b); }
  static bool is_unit(const T& g) { return g.degree() == 0; }
  static T normalizer(const T& lead) { return UPoly(Rat(1) / lead.lead()); }
};

template <class D>
using Dense = std::vector<typename D::T>;

template <class D>
void trim_dense(Dense<D>& a) {
  while (!a.empty() && D::zero(a.back())) a.pop_back();
}

template <class D>
void make_primitive(Dense<D>& a) {
  if (a.empty()) return;
  typename D::T g = a.back();
  for (const auto& c : a) {
    if (D::zero(c)) continue;
    g = D::gcd(g, c);
    if (D::is_unit(g)) break;
  }
  if (!D::is_unit(g))
    for (auto& c : a)
      if (!D::zero(c)) c = D::div(c, g);
  typename D::T u = D::normalizer(a.back());
  for (auto& c : a)
    if (!D::zero(c)) c = D::mul(c, u);
}

template <class D>
Dense<D> primitive_gcd(Dense<D> a, Dense<D> b) {
  make_primitive<D>(a);
  make_primitive<D>(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    // Pseudo-remainder of a by b, kept primitive at every step.
    while (a.size() >= b.size()) {
      std::size_t shift = a.size() - b.size();
      typename D::T la = a.back(), lb = b.back();
      for (auto& c : a) c = D::mul(c, lb);
      for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = D::sub(a[shift + i], D::mul(la, b[i]));
      trim_dense<D>(a);
      make_primitive<D>(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a;
}

enum class CoeffKind { rational, polynomial_in_s, general };

CoeffKind classify(const std::vector<FieldElem>& c) {
  CoeffKind k = CoeffKind::rational;
  for (const auto& x : c) {
    if (!x.b().is_zero()) return CoeffKind::general;
    if (!x.a().is_constant()) k = CoeffKind::polynomial_in_s;
  }
  return k;
}

Dense<IntDomain> to_int_dense(const FPoly& p) {
  BigInt l = 1;
  for (const auto& c : p.coeffs()) {
    Rat r = c.rational_value();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.get_den_mpz_t());
  }
  Dense<IntDomain> out;
  for (const auto& c : p.coeffs()) {
    Rat r = c.rational_value() * l;
    out.push_back(r.get_num());
  }
  return out;
}

Dense<PolyDomain> to_poly_dense(const FPoly& p) {
  UPoly l(1);
  for (const auto& c : p.coeffs()) {
    const UPoly& d = c.a().den();
    if (!d.is_one()) l = (l * d).divide_exact(gcd(l, d));
  }
  Dense<PolyDomain> out;
  for (const auto& c : p.coeffs()) out.push_back(c.a().num() * l.divide_exact(c.a().den()));
  return out;
}

}  // namespace

FPoly gcd(FPoly a, FPoly b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.degree() == 0 || b.degree() == 0) return FPoly(FieldElem(1));
  CoeffKind ka = classify(a.coeffs()), kb = classify(b.coeffs());
  if (ka == CoeffKind::rational && kb == CoeffKind::rational) {
    auto g = primitive_gcd<IntDomain>(to_int_dense(a), to_int_dense(b));
    std::vector<FieldElem> c;
    for (auto& x : g) c.emplace_back(Rat(x));
    return FPoly(std::move(c)).monic();
  }
  if (ka != CoeffKind::general && kb != CoeffKind::general) {
    auto g = primitive_gcd<PolyDomain>(to_poly_dense(a), to_poly_dense(b));
    std::vector<FieldElem> c;
    for (auto& x : g) c.emplace_back(RatFunc(x));
    return FPoly(std::move(c)).monic();
  }
  while (!b.is_zero()) {
    FPoly r = a.rem(b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

FieldElem resultant(const FPoly& a0, const FPoly& b0) {
  if (a0.is_zero() || b0.is_zero()) return FieldElem();
  FPoly a = a0, b = b0;
  FieldElem acc(1);
  while (true) {
    int da = a.degree(), db = b.degree();
    if (db == 0) {
      FieldElem p(1);
      for (int i = 0; i < da; ++i) p *= b.lead();
      return acc * p;
    }
    if (da == 0) {
      FieldElem p(1);
      for (int i = 0; i < db; ++i) p *= a.lead();
      return acc * p;
    }
    FPoly r = a.rem(b);
    if (r.is_zero()) return FieldElem();
    // res(a,b) = (-1)^{da db} lc(b)^{da - dr} res(b, r)
    if ((da % 2 == 1) && (db % 2 == 1)) acc = -acc;
    for (int i = 0; i < da - r.degree(); ++i) acc *= b.lead();
    a = std::move(b);
    b = std::move(r);
  }
}

FPoly interpolate(const std::vector<FieldElem>& xs, const std::vector<FieldElem>& ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
  std::size_t n = xs.size();
  std::vector<FieldElem> dd = ys;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  FPoly result;
  for (std::size_t k = n; k-- > 0;) result = result * FPoly::linear(xs[k]) + FPoly(dd[k]);
  return result;
}

FPoly to_fpoly(const MPoly& p, std::size_t var) {
  std::vector<FieldElem> c(std::max(p.degree_in(var) + 1, 0));
  for (const auto& [m, v] : p.terms()) {
    for (std::size_t i = 0; i < p.nvars(); ++i)
      if (i != var && m.exp[i] != 0)
        throw std::invalid_argument("polynomial is not univariate in " + p.vars()[var]);
    c[m.exp[var]] = v;
  }
  return FPoly(std::move(c));
}

MPoly from_fpoly(const FPoly& p, const std::vector<std::string>& vars, std::size_t var) {
  MPoly r(vars);
  for (int i = p.degree(); i >= 0; --i) {
    if (p.coeff(i).is_zero()) continue;
    Monomial m;
    m.exp[var] = static_cast<std::uint16_t>(i);
    r += MPoly::term(vars, m, p.coeff(i));
  }
  return r;
}

}  // namespace k3pencil
