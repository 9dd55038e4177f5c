#include "k3pencil/exactmath/mpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace k3pencil {

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned e = unsigned(exp[i]) + o.exp[i];
    if (e > 0xFFFF) throw std::overflow_error("monomial exponent overflow");
    r.exp[i] = static_cast<std::uint16_t>(e);
  }
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exp[i] > o.exp[i]) return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = static_cast<std::uint16_t>(o.exp[i] - exp[i]);
  return r;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
  unsigned da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i];
  return false;
}

namespace {

// Sort by descending grlex and merge equal monomials, dropping zeros.
void canonicalize(std::vector<MPoly::Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const MPoly::Term& a, const MPoly::Term& b) { return grlex_less(b.first, a.first); });
  std::vector<MPoly::Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      if (!out.empty() && out.back().second.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().second.is_zero()) out.pop_back();
  terms = std::move(out);
}

}  // namespace

MPoly::MPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {
  if (vars_.size() > kMaxVars) throw std::invalid_argument("too many variables");
}

MPoly MPoly::constant(std::vector<std::string> vars, const FieldElem& c) {
  return term(std::move(vars), Monomial{}, c);
}

MPoly MPoly::variable(std::vector<std::string> vars, std::string_view name) {
  MPoly r(std::move(vars));
  Monomial m;
  m.exp[r.var_index(name)] = 1;
  r.terms_.emplace_back(m, FieldElem(1));
  return r;
}

MPoly MPoly::term(std::vector<std::string> vars, const Monomial& m, const FieldElem& c) {
  MPoly r(std::move(vars));
  for (std::size_t i = r.nvars(); i < kMaxVars; ++i)
    if (m.exp[i] != 0) throw std::invalid_argument("monomial uses an undeclared variable");
  if (!c.is_zero()) r.terms_.emplace_back(m, c);
  return r;
}

std::size_t MPoly::var_index(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
}

bool MPoly::has_var(std::string_view name) const {
  return std::find(vars_.begin(), vars_.end(), name) != vars_.end();
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.degree() == 0);
}

FieldElem MPoly::constant_value() const {
  if (!is_constant()) throw std::logic_error("not a constant polynomial: " + to_string());
  return terms_.empty() ? FieldElem() : terms_[0].second;
}

FieldElem MPoly::coeff(const Monomial& m) const {
  for (const auto& [mm, c] : terms_)
    if (mm == m) return c;
  return FieldElem();
}

int MPoly::total_degree() const { return terms_.empty() ? -1 : int(terms_.front().first.degree()); }

int MPoly::degree_in(std::size_t var) const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, int(t.first.exp[var]));
  return d;
}

bool MPoly::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.first.degree() != terms_.front().first.degree()) return false;
  return true;
}

std::vector<std::size_t> MPoly::support() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < nvars(); ++v)
    if (degree_in(v) > 0) out.push_back(v);
  return out;
}

void MPoly::check_ring(const MPoly& o) const {
  if (vars_ != o.vars_) throw std::invalid_argument("polynomials live in different rings");
}

MPoly MPoly::operator-() const {
  MPoly r(*this);
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (o.terms_.empty()) return *this;
  if (vars_.empty() && terms_.empty()) vars_ = o.vars_;
  check_ring(o);
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && grlex_less(o.terms_[j].first, terms_[i].first))) {
      out.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || grlex_less(terms_[i].first, o.terms_[j].first)) {
      out.push_back(o.terms_[j++]);
    } else {
      FieldElem c = terms_[i].second + o.terms_[j].second;
      if (!c.is_zero()) out.emplace_back(terms_[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) { return *this += -o; }

MPoly& MPoly::operator*=(const FieldElem& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  if (c.is_one()) return *this;
  for (auto& t : terms_) t.second *= c;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.terms_.empty() || b.terms_.empty()) {
    MPoly r(a.vars_.empty() ? b.vars_ : a.vars_);
    return r;
  }
  a.check_ring(b);
  MPoly r(a.vars_);
  r.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.terms_.emplace_back(ma * mb, ca * cb);
  canonicalize(r.terms_);
  return r;
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.terms_.empty() && b.terms_.empty()) return true;
  if (a.vars_ != b.vars_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].first == b.terms_[i].first) || !(a.terms_[i].second == b.terms_[i].second))
      return false;
  return true;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly result = constant(vars_, FieldElem(1));
  MPoly base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

MPoly MPoly::derivative(std::size_t var) const {
  MPoly r(vars_);
  for (const auto& [m, c] : terms_) {
    if (m.exp[var] == 0) continue;
    Monomial mm = m;
    --mm.exp[var];
    r.terms_.emplace_back(mm, c * FieldElem(long(m.exp[var])));
  }
  canonicalize(r.terms_);
  return r;
}

MPoly MPoly::monic() const {
  if (terms_.empty()) return *this;
  return *this * lead_coeff().inverse();
}

MPoly MPoly::compose(std::span<const MPoly> values) const {
  if (values.size() != nvars()) throw std::invalid_argument("compose: wrong number of values");
  if (values.empty()) return *this;
  const auto& target = values[0].vars();
  for (const auto& v : values)
    if (!v.is_zero() && v.vars() != target && !v.vars().empty())
      throw std::invalid_argument("compose: values live in different rings");
  // Cache powers of each value.
  std::vector<std::vector<MPoly>> powers(nvars());
  for (std::size_t v = 0; v < nvars(); ++v) {
    int d = degree_in(v);
    powers[v].push_back(constant(target, FieldElem(1)));
    for (int k = 1; k <= d; ++k) powers[v].push_back(powers[v].back() * values[v].in_ring(target));
  }
  MPoly r(target);
  for (const auto& [m, c] : terms_) {
    MPoly t = constant(target, c);
    for (std::size_t v = 0; v < nvars(); ++v)
      if (m.exp[v]) t = t * powers[v][m.exp[v]];
    r += t;
  }
  return r;
}

MPoly MPoly::substitute_var(std::size_t var, const MPoly& value) const {
  std::vector<MPoly> vals;
  for (std::size_t v = 0; v < nvars(); ++v) vals.push_back(v == var ? value.in_ring(vars_) : variable(vars_, vars_[v]));
  return compose(vals);
}

FieldElem MPoly::eval(std::span<const FieldElem> point) const {
  if (point.size() != nvars()) throw std::invalid_argument("eval: wrong number of coordinates");
  std::vector<std::vector<FieldElem>> powers(nvars());
  for (std::size_t v = 0; v < nvars(); ++v) {
    powers[v].push_back(FieldElem(1));
    for (int k = 1; k <= degree_in(v); ++k) powers[v].push_back(powers[v].back() * point[v]);
  }
  FieldElem r;
  for (const auto& [m, c] : terms_) {
    FieldElem t = c;
    for (std::size_t v = 0; v < nvars(); ++v)
      if (m.exp[v]) t *= powers[v][m.exp[v]];
    r += t;
  }
  return r;
}

MPoly MPoly::restrict(std::span<const std::optional<FieldElem>> values) const {
  if (values.size() != nvars()) throw std::invalid_argument("restrict: wrong number of values");
  std::vector<std::string> keep;
  std::vector<int> newpos(nvars(), -1);
  for (std::size_t v = 0; v < nvars(); ++v)
    if (!values[v]) {
      newpos[v] = int(keep.size());
      keep.push_back(vars_[v]);
    }
  std::vector<std::vector<FieldElem>> powers(nvars());
  for (std::size_t v = 0; v < nvars(); ++v) {
    if (!values[v]) continue;
    powers[v].push_back(FieldElem(1));
    for (int k = 1; k <= degree_in(v); ++k) powers[v].push_back(powers[v].back() * *values[v]);
  }
  MPoly r(keep);
  for (const auto& [m, c] : terms_) {
    Monomial mm;
    FieldElem cc = c;
    for (std::size_t v = 0; v < nvars(); ++v) {
      if (values[v]) {
        if (m.exp[v]) cc *= powers[v][m.exp[v]];
      } else {
        mm.exp[newpos[v]] = m.exp[v];
      }
    }
    if (!cc.is_zero()) r.terms_.emplace_back(mm, std::move(cc));
  }
  canonicalize(r.terms_);
  return r;
}

MPoly MPoly::in_ring(const std::vector<std::string>& vars) const {
  if (vars == vars_) return *this;
  MPoly r(vars);
  std::vector<std::size_t> pos(nvars());
  for (std::size_t v = 0; v < nvars(); ++v) {
    auto it = std::find(vars.begin(), vars.end(), vars_[v]);
    if (it == vars.end()) {
      if (degree_in(v) > 0) throw std::invalid_argument("in_ring: variable '" + vars_[v] + "' missing from target");
      pos[v] = kMaxVars;
    } else {
      pos[v] = std::size_t(it - vars.begin());
    }
  }
  for (const auto& [m, c] : terms_) {
    Monomial mm;
    for (std::size_t v = 0; v < nvars(); ++v)
      if (m.exp[v]) mm.exp[pos[v]] = m.exp[v];
    r.terms_.emplace_back(mm, c);
  }
  canonicalize(r.terms_);
  return r;
}

std::vector<MPoly> MPoly::coefficients_in(std::size_t var) const {
  int d = degree_in(var);
  std::vector<MPoly> out(std::max(d + 1, 0), MPoly(vars_));
  for (const auto& [m, c] : terms_) {
    Monomial mm = m;
    mm.exp[var] = 0;
    out[m.exp[var]].terms_.emplace_back(mm, c);
  }
  for (auto& p : out) canonicalize(p.terms_);
  return out;
}

std::optional<MPoly> MPoly::try_divide(const MPoly& b) const {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (is_zero()) return MPoly(vars_.empty() ? b.vars_ : vars_);
  check_ring(b);
  MPoly rem = *this;
  MPoly q(vars_);
  const Monomial& lb = b.lead_monomial();
  FieldElem lbinv = b.lead_coeff().inverse();
  while (!rem.is_zero()) {
    const Monomial& lr = rem.lead_monomial();
    // Leading term of the remainder must be divisible; with a global
    // monomial order any non-divisible leading term means b does not divide.
    if (!lb.divides(lr)) return std::nullopt;
    MPoly t = term(vars_, lb.quotient_of(lr), rem.lead_coeff() * lbinv);
    q.terms_.push_back(t.terms_.front());
    rem -= t * b;
  }
  canonicalize(q.terms_);
  return q;
}

MPoly MPoly::divide_exact(const MPoly& b) const {
  auto q = try_divide(b);
  if (!q) throw std::domain_error("inexact polynomial division");
  return *q;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    std::string cs;
    bool neg = false;
    bool unit = false;
    if (c.is_rational()) {
      Rat r = c.rational_value();
      neg = r < 0;
      if (neg) r = -r;
      unit = r == 1;
      cs = k3pencil::to_string(r);
    } else {
      cs = "(" + c.to_string() + ")";
    }
    std::string mono;
    for (std::size_t v = 0; v < nvars(); ++v) {
      if (!m.exp[v]) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[v];
      if (m.exp[v] > 1) mono += "^" + std::to_string(m.exp[v]);
    }
    std::string piece;
    if (mono.empty()) piece = cs;
    else if (unit) piece = mono;
    else piece = cs + "*" + mono;
    if (out.empty()) out = neg ? "-" + piece : piece;
    else out += (neg ? " - " : " + ") + piece;
  }
  return out;
}

PolyFraction PolyFraction::of(const MPoly& p) {
  return {p, MPoly::constant(p.vars(), FieldElem(1))};
}

PolyFraction PolyFraction::operator+(const PolyFraction& o) const {
  if (den == o.den) return {num + o.num, den};
  return {num * o.den + o.num * den, den * o.den};
}

PolyFraction PolyFraction::operator-(const PolyFraction& o) const {
  if (den == o.den) return {num - o.num, den};
  return {num * o.den - o.num * den, den * o.den};
}

PolyFraction PolyFraction::operator*(const PolyFraction& o) const { return {num * o.num, den * o.den}; }

PolyFraction PolyFraction::operator/(const PolyFraction& o) const {
  if (o.num.is_zero()) throw std::domain_error("division by a zero rational function");
  return {num * o.den, den * o.num};
}

MPoly PolyFraction::cross_residual(const PolyFraction& o) const { return num * o.den - o.num * den; }

}  // namespace k3pencil
