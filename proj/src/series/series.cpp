// SPDX-License-Identifier: MIT
#include "k3pencil/series/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace k3pencil {

namespace {

BigInt binom(unsigned n, unsigned k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

/// p(x + a)
UPoly shift(const UPoly& p, const Rat& a) {
  UPoly r;
  for (int k = p.degree(); k >= 0; --k) r = r * theta_plus(a) + UPoly(p.coeff(k));
  return r;
}

bool is_integral(const UPoly& p) {
  for (const auto& c : p.coeffs())
    if (c.get_den() != 1) return false;
  return true;
}

BigInt content_of(const UPoly& p) {
  BigInt g = 0;
  for (const auto& c : p.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
  return g;
}

std::vector<BigInt> signed_divisors(const BigInt& n0) {
  BigInt n = abs(n0);
  std::vector<BigInt> out;
  for (BigInt d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  std::vector<BigInt> all;
  for (const auto& d : out) {
    all.push_back(d);
    all.push_back(-d);
  }
  return all;
}

/// Lagrange interpolation through integer points.
UPoly lagrange(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
  UPoly r;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    UPoly term(ys[i]);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (i == j) continue;
      term = term * theta_plus(-xs[j]) * (1 / (xs[i] - xs[j]));
    }
    r += term;
  }
  return r;
}

/// A nonconstant proper factor of degree k, if any.
std::optional<UPoly> find_factor(const UPoly& p, int k) {
  std::vector<Rat> xs, vals;
  for (long x = 0; static_cast<int>(xs.size()) < k + 1; x = x <= 0 ? 1 - x : -x) {
    Rat v = p.eval(Rat(x));
    if (v == 0) continue;  // rational roots are removed beforehand
    xs.push_back(Rat(x));
    vals.push_back(v);
  }
  std::vector<std::vector<BigInt>> divs;
  for (const auto& v : vals) divs.push_back(signed_divisors(v.get_num()));
  std::vector<std::size_t> idx(xs.size(), 0);
  while (true) {
    std::vector<Rat> ys;
    for (std::size_t i = 0; i < xs.size(); ++i) ys.push_back(Rat(divs[i][idx[i]]));
    UPoly q = lagrange(xs, ys);
    if (q.degree() == k && is_integral(q)) {
      UPoly quo, rem;
      UPoly::divmod(p, q, quo, rem);
      if (rem.is_zero() && is_integral(quo)) return q;
    }
    std::size_t i = 0;
    while (i < idx.size() && ++idx[i] == divs[i].size()) idx[i++] = 0;
    if (i == idx.size()) return std::nullopt;
  }
}

UPoly normalize_primitive(UPoly p) {
  BigInt den = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  p *= Rat(den);
  BigInt c = content_of(p);
  if (c != 0) p *= Rat(1) / Rat(c);
  if (p.lead() < 0) p = -p;
  return p;
}

BigInt squarefree_part(const BigInt& n, BigInt& square_root_of_rest) {
  BigInt m = n, out = 1;
  square_root_of_rest = 1;
  for (BigInt p = 2; p * p <= m; ++p) {
    while (m % (p * p) == 0) {
      m /= p * p;
      square_root_of_rest *= p;
    }
    if (m % p == 0) {
      m /= p;
      out *= p;
    }
  }
  return out * m;
}

}  // namespace

BigInt apery(unsigned n) {
  BigInt s = 0;
  for (unsigned k = 0; k <= n; ++k) {
    BigInt t = binom(n, k) * binom(n + k, k);
    s += t * t;
  }
  return s;
}

BigInt sum_a(unsigned n) {
  BigInt s = 0;
  for (unsigned k = 0; k <= n; ++k) {
    BigInt t = binom(n, k);
    s += t * t * binom(2 * k, k);
  }
  return s;
}

BigInt domb(unsigned n) { return binom(2 * n, n) * sum_a(n); }

UPoly theta_plus(const Rat& c, const Rat& scale) { return UPoly(std::vector<Rat>{c, scale}); }

ThetaOperator& ThetaOperator::add(int a, const UPoly& p) {
  if (a < 0) throw std::invalid_argument("negative power in theta operator");
  UPoly& t = terms_[a];
  t += p;
  if (t.is_zero()) terms_.erase(a);
  return *this;
}

UPoly ThetaOperator::term(int a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? UPoly() : it->second;
}

ThetaOperator ThetaOperator::scaled_term(int a, const Rat& c) const {
  ThetaOperator r = *this;
  auto it = r.terms_.find(a);
  if (it == r.terms_.end()) throw std::invalid_argument("operator has no term of that power");
  it->second *= c;
  return r;
}

int ThetaOperator::order() const {
  int d = 0;
  for (const auto& [a, p] : terms_) d = std::max(d, p.degree());
  return d;
}

std::string ThetaOperator::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, p] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (a == 1) os << var_ << "*";
    if (a > 1) os << var_ << "^" << a << "*";
    os << "(" << p.to_string("theta") << ")";
  }
  return first ? "0" : os.str();
}

ThetaOperator apery_operator() {
  ThetaOperator op("lambda");
  UPoly t = theta_plus(0);
  op.add(0, t * t * t);
  op.add(1, -(theta_plus(1, 2) * UPoly(std::vector<Rat>{5, 17, 17})));
  UPoly t1 = theta_plus(1);
  op.add(2, t1 * t1 * t1);
  return op;
}

ThetaOperator fermi_operator(bool corrected) {
  ThetaOperator op("xi");
  UPoly t = theta_plus(0);
  op.add(0, t * t * t);
  UPoly mid = theta_plus(1) * UPoly(std::vector<Rat>{20, 34, 17});
  op.add(2, -(mid * Rat(corrected ? 2 : 1)));
  UPoly t2 = theta_plus(2);
  op.add(4, t2 * t2 * t2);
  return op;
}

ThetaOperator domb_operator(bool corrected) {
  ThetaOperator op("mu");
  UPoly t = theta_plus(0);
  op.add(0, t * t * t);
  op.add(1, -(theta_plus(1, 2) * UPoly(std::vector<Rat>{3, 10, 10}) * Rat(2)));
  op.add(2, theta_plus(1, 2) * theta_plus(1) * theta_plus(3, 2) * Rat(corrected ? 36 : 1));
  return op;
}

PowerSeries PowerSeries::from(const std::string& var, const std::function<Rat(unsigned)>& seq, std::size_t N,
                              unsigned stride) {
  PowerSeries f;
  f.var = var;
  f.coeffs.assign(N + 1, Rat(0));
  for (std::size_t i = 0; i * stride <= N; ++i) f.coeffs[i * stride] = seq(static_cast<unsigned>(i));
  return f;
}

PowerSeries theta_apply(const ThetaOperator& op, const PowerSeries& f) {
  if (op.var() != f.var) throw std::invalid_argument("variable mismatch: " + op.var() + " vs " + f.var);
  PowerSeries g;
  g.var = f.var;
  g.coeffs.assign(f.coeffs.size(), Rat(0));
  for (const auto& [a, p] : op.terms())
    for (std::size_t n = 0; n + a < f.coeffs.size(); ++n)
      if (f.coeffs[n] != 0) g.coeffs[n + a] += p.eval(Rat(static_cast<long>(n))) * f.coeffs[n];
  return g;
}

Recurrence operator_to_recurrence(const ThetaOperator& op) {
  Recurrence r;
  for (const auto& [a, p] : op.terms()) r.c[a] = shift(p, Rat(-a));
  return r;
}

Rat Recurrence::residual(const std::function<Rat(long)>& u, long n) const {
  Rat v = 0;
  for (const auto& [a, p] : c)
    if (n - a >= 0) v += p.eval(Rat(n)) * u(n - a);
  return v;
}

Rat Recurrence::solve(const std::function<Rat(long)>& u, long n) const {
  auto it = c.find(0);
  if (it == c.end()) throw std::domain_error("recurrence has no leading term");
  Rat lead = it->second.eval(Rat(n));
  if (lead == 0) throw std::domain_error("leading coefficient vanishes at n=" + std::to_string(n));
  Rat v = 0;
  for (const auto& [a, p] : c)
    if (a > 0 && n - a >= 0) v += p.eval(Rat(n)) * u(n - a);
  return -v / lead;
}

std::string Recurrence::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, p] : c) {
    if (!first) os << " + ";
    first = false;
    os << "(" << p.to_string("n") << ")*u(n" << (a ? "-" + std::to_string(a) : "") << ")";
  }
  os << " = 0";
  return os.str();
}

AnnihilationResult annihilation_check(const ThetaOperator& op, const PowerSeries& f) {
  AnnihilationResult r;
  PowerSeries g = theta_apply(op, f);
  for (std::size_t n = 0; n < g.coeffs.size(); ++n)
    if (g.coeffs[n] != 0) {
      r.first_failure = n;
      r.value = g.coeffs[n];
      return r;
    }
  r.pass = true;
  return r;
}

std::vector<Rat> recurrence_prefix(const Recurrence& r, const Rat& u0, std::size_t count) {
  std::vector<Rat> u;
  if (count == 0) return u;
  u.push_back(u0);
  auto get = [&](long i) { return i < 0 ? Rat(0) : u[static_cast<std::size_t>(i)]; };
  for (std::size_t n = 1; n < count; ++n) u.push_back(r.solve(get, static_cast<long>(n)));
  return u;
}

Rat fit_term_factor(const ThetaOperator& op, int a, const std::vector<Rat>& seq) {
  Recurrence r = operator_to_recurrence(op);
  auto it = r.c.find(a);
  if (it == r.c.end()) throw std::invalid_argument("operator has no term of that power");
  auto u = [&](long i) { return i < 0 ? Rat(0) : seq[static_cast<std::size_t>(i)]; };
  for (long n = a; n < static_cast<long>(seq.size()); ++n) {
    Rat contrib = it->second.eval(Rat(n)) * u(n - a);
    if (contrib == 0) continue;
    Rat rest = r.residual(u, n) - contrib;
    return -rest / contrib;
  }
  throw std::domain_error("term never contributes within the given prefix");
}

std::string QuadraticSurd::to_string() const {
  std::string s = k3pencil::to_string(a);
  if (b == 0 || d == 1) return k3pencil::to_string(a + (d == 1 ? b : Rat(0)));
  std::string bs = abs(b) == 1 ? "" : k3pencil::to_string(abs(b)) + "*";
  return (a == 0 ? (b < 0 ? "-" : "") : s + (b < 0 ? "-" : "+")) + bs + "sqrt(" + d.get_str() + ")";
}

std::vector<std::pair<UPoly, unsigned>> factor_over_z(const UPoly& p0, BigInt& content) {
  if (p0.is_zero()) throw std::invalid_argument("factoring the zero polynomial");
  BigInt den = 1;
  for (const auto& c : p0.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  UPoly p = p0 * Rat(den);
  content = content_of(p);
  if (p.lead() < 0) content = -content;
  p *= Rat(1) / Rat(content);
  std::vector<std::pair<UPoly, unsigned>> out;
  auto take = [&](const UPoly& f) {
    unsigned e = 0;
    while (true) {
      UPoly q, r;
      UPoly::divmod(p, f, q, r);
      if (!r.is_zero()) break;
      p = q;
      ++e;
    }
    if (e) out.emplace_back(f, e);
  };
  // Rational roots: x = r/s with r | p(0) and s | lc.
  if (p.coeff(0) == 0) take(UPoly::monomial(1, 1));
  while (p.degree() >= 1) {
    bool found = false;
    for (const auto& r : signed_divisors(p.coeff(0).get_num())) {
      for (const auto& s : signed_divisors(p.lead().get_num())) {
        if (s < 0) continue;
        Rat root(r, s);
        root.canonicalize();
        if (p.eval(root) == 0) {
          take(normalize_primitive(theta_plus(-root)));
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) break;
  }
  for (int k = 2; 2 * k <= p.degree(); ++k) {
    while (p.degree() >= 2 * k) {
      auto f = find_factor(p, k);
      if (!f) break;
      take(normalize_primitive(*f));
    }
  }
  if (p.degree() >= 1) out.emplace_back(normalize_primitive(p), 1);
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first.degree() < y.first.degree(); });
  return out;
}

std::string Singularities::factored(std::string_view var) const {
  std::ostringstream os;
  if (content != 1) os << content.get_str();
  for (const auto& [f, e] : factors) {
    os << "(" << f.to_string(var) << ")";
    if (e > 1) os << "^" << e;
  }
  return os.str();
}

Singularities operator_singularities(const ThetaOperator& op) {
  Singularities s;
  const int r = op.order();
  for (const auto& [a, p] : op.terms())
    if (p.degree() == r) s.symbol += UPoly::monomial(p.lead(), a);
  s.factors = factor_over_z(s.symbol, s.content);
  for (const auto& [f, e] : s.factors) {
    if (f.degree() == 1) {
      s.roots.push_back({-f.coeff(0) / f.coeff(1), 0, 1});
    } else if (f.degree() == 2) {
      Rat A = f.coeff(2), B = f.coeff(1), C = f.coeff(0);
      Rat disc = B * B - 4 * A * C;
      BigInt sq;
      BigInt d = squarefree_part(abs(disc.get_num()), sq);
      if (disc < 0) d = -d;
      Rat a = -B / (2 * A), b = Rat(sq) / (2 * A);
      if (b < 0) b = -b;
      s.roots.push_back({a, b, d});
      s.roots.push_back({a, -b, d});
    }
  }
  return s;
}

}  // namespace k3pencil
