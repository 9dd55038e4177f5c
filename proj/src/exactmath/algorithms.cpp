#include "k3pencil/exactmath/algorithms.hpp"

#include <stdexcept>

namespace k3pencil {

std::optional<std::size_t> univariate_var(const MPoly& p) {
  auto sup = p.support();
  if (sup.empty()) return std::nullopt;
  if (sup.size() > 1) throw std::invalid_argument("expected a univariate polynomial: " + p.to_string());
  return sup[0];
}

namespace {

// Shared variable for a pair of univariate inputs (constants adapt to the other).
std::size_t common_univariate_var(const MPoly& p, const MPoly& q) {
  auto vp = univariate_var(p);
  auto vq = univariate_var(q);
  if (vp && vq && *vp != *vq) throw std::invalid_argument("polynomials in different variables");
  if (vp) return *vp;
  if (vq) return *vq;
  return 0;
}

const std::vector<std::string>& ring_of(const MPoly& p, const MPoly& q) {
  return p.vars().empty() ? q.vars() : p.vars();
}

}  // namespace

MPoly gcd_poly(const MPoly& p, const MPoly& q) {
  if (p.is_zero() && q.is_zero()) throw std::invalid_argument("undefined gcd");
  std::size_t v = common_univariate_var(p, q);
  const auto& vars = ring_of(p, q);
  if (vars.empty()) return MPoly::constant({}, FieldElem(1));
  FPoly g = gcd(to_fpoly(p.in_ring(vars), v), to_fpoly(q.in_ring(vars), v));
  return from_fpoly(g, vars, v);
}

std::vector<std::pair<FPoly, unsigned>> squarefree_factors(const FPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree decomposition of the zero polynomial");
  std::vector<std::pair<FPoly, unsigned>> out;
  if (p.degree() == 0) return out;
  // Yun: b = p/gcd(p,p'), d = p'/gcd - b'; a_i = gcd(b, d)
  FPoly f = p.monic();
  FPoly fp = f.derivative();
  FPoly a = gcd(f, fp);
  FPoly b = f.divide_exact(a);
  FPoly c = fp.divide_exact(a);
  FPoly d = c - b.derivative();
  unsigned i = 1;
  while (b.degree() > 0) {
    FPoly g = gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g, i);
    b = b.divide_exact(g);
    c = d.divide_exact(g);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

FPoly squarefree_part(const FPoly& p) {
  if (p.degree() <= 0) return FPoly(FieldElem(1));
  return p.monic().divide_exact(gcd(p, p.derivative()));
}

MPoly SquarefreeDecomposition::expand(const std::vector<std::string>& vars) const {
  MPoly r = MPoly::constant(vars, unit);
  for (const auto& f : factors) r = r * f.factor.in_ring(vars).pow(f.exponent);
  return r;
}

SquarefreeDecomposition squarefree_decomposition(const MPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree decomposition of the zero polynomial");
  SquarefreeDecomposition out;
  auto v = univariate_var(p);
  if (!v) {
    out.unit = p.constant_value();
    return out;
  }
  FPoly f = to_fpoly(p, *v);
  out.unit = f.lead();
  for (auto& [g, e] : squarefree_factors(f)) out.factors.push_back({from_fpoly(g, p.vars(), *v), e});
  return out;
}

MPoly resultant(const MPoly& p, const MPoly& q, std::string_view var) {
  const auto& vars = ring_of(p, q);
  MPoly pp = p.in_ring(vars), qq = q.in_ring(vars);
  std::size_t v = pp.var_index(var);
  int m = pp.degree_in(v), n = qq.degree_in(v);
  if (m <= 0 || n <= 0) throw std::invalid_argument("resultant needs positive degree in " + std::string(var));
  auto pc = pp.coefficients_in(v);
  auto qc = qq.coefficients_in(v);
  int N = m + n;
  MPoly zero(vars);
  std::vector<std::vector<MPoly>> M(N, std::vector<MPoly>(N, zero));
  // Rows 0..n-1: shifts of p (coefficients from the top degree down).
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) M[r][r + k] = pc[m - k];
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) M[n + r][r + k] = qc[n - k];
  bool negate = false;
  MPoly prev = MPoly::constant(vars, FieldElem(1));
  for (int k = 0; k < N - 1; ++k) {
    if (M[k][k].is_zero()) {
      int piv = -1;
      for (int i = k + 1; i < N; ++i)
        if (!M[i][k].is_zero()) {
          piv = i;
          break;
        }
      if (piv < 0) return zero;
      std::swap(M[k], M[piv]);
      negate = !negate;
    }
    for (int i = k + 1; i < N; ++i) {
      for (int j = k + 1; j < N; ++j) {
        MPoly t = M[i][j] * M[k][k] - M[i][k] * M[k][j];
        M[i][j] = t.divide_exact(prev);
      }
      M[i][k] = zero;
    }
    prev = M[k][k];
  }
  MPoly det = M[N - 1][N - 1];
  return negate ? -det : det;
}

MPoly resultant_by_interpolation(const MPoly& p, const MPoly& q, std::string_view var) {
  const auto& vars = ring_of(p, q);
  MPoly pp = p.in_ring(vars), qq = q.in_ring(vars);
  std::size_t v = pp.var_index(var);
  int m = pp.degree_in(v), n = qq.degree_in(v);
  if (m <= 0 || n <= 0) throw std::invalid_argument("resultant needs positive degree in " + std::string(var));
  std::optional<std::size_t> other;
  for (const MPoly* f : {&pp, &qq})
    for (auto u : f->support()) {
      if (u == v) continue;
      if (other && *other != u) throw std::invalid_argument("resultant_by_interpolation: more than two variables");
      other = u;
    }
  auto univariate_in_v = [&](const MPoly& f, const FieldElem& x0) {
    std::vector<std::optional<FieldElem>> vals(vars.size(), FieldElem(0));
    vals[v] = std::nullopt;
    if (other) vals[*other] = x0;
    return to_fpoly(f.restrict(vals), 0);
  };
  if (!other) {
    FieldElem r = resultant(univariate_in_v(pp, 0), univariate_in_v(qq, 0));
    return MPoly::constant(vars, r);
  }
  int bound = m * qq.degree_in(*other) + n * pp.degree_in(*other);
  std::vector<FieldElem> xs, ys;
  for (long k = 0; int(xs.size()) <= bound; ++k) {
    // 0, 1, -1, 2, -2, ...
    FieldElem x0((k % 2 == 1) ? (k + 1) / 2 : -(k / 2));
    FPoly a = univariate_in_v(pp, x0), b = univariate_in_v(qq, x0);
    if (a.degree() != m || b.degree() != n) continue;  // leading coefficient vanishes here
    xs.push_back(x0);
    ys.push_back(resultant(a, b));
  }
  return from_fpoly(interpolate(xs, ys), vars, *other);
}

PolyFraction substitute(const MPoly& p, const Bindings& bindings) {
  std::vector<std::string> target;
  for (const auto& [name, f] : bindings) {
    const auto& tv = f.num.vars().empty() ? f.den.vars() : f.num.vars();
    if (target.empty()) target = tv;
    else if (!tv.empty() && tv != target) throw std::invalid_argument("substitute: bindings live in different rings");
  }
  if (target.empty()) target = p.vars();
  for (const auto& [name, f] : bindings) {
    if (f.den.is_zero()) throw std::domain_error("substitute: zero denominator for " + name);
    if (!p.has_var(name)) throw std::invalid_argument("substitute: unknown variable " + name);
  }
  std::vector<PolyFraction> vals;
  std::vector<int> degs;
  for (std::size_t v = 0; v < p.nvars(); ++v) {
    auto it = bindings.find(p.vars()[v]);
    if (it != bindings.end()) {
      vals.push_back({it->second.num.in_ring(target), it->second.den.in_ring(target)});
    } else {
      vals.push_back(PolyFraction::of(MPoly::variable(target, p.vars()[v])));
    }
    degs.push_back(std::max(p.degree_in(v), 0));
  }
  // num = sum c_m prod num_v^{m_v} den_v^{D_v - m_v}; den = prod den_v^{D_v}
  std::vector<std::vector<MPoly>> npow(p.nvars()), dpow(p.nvars());
  MPoly one = MPoly::constant(target, FieldElem(1));
  for (std::size_t v = 0; v < p.nvars(); ++v) {
    npow[v].push_back(one);
    dpow[v].push_back(one);
    for (int k = 1; k <= degs[v]; ++k) {
      npow[v].push_back(npow[v].back() * vals[v].num);
      dpow[v].push_back(dpow[v].back() * vals[v].den);
    }
  }
  MPoly num(target);
  for (const auto& [m, c] : p.terms()) {
    MPoly t = MPoly::constant(target, c);
    for (std::size_t v = 0; v < p.nvars(); ++v) {
      if (m.exp[v]) t = t * npow[v][m.exp[v]];
      if (degs[v] - m.exp[v]) t = t * dpow[v][degs[v] - m.exp[v]];
    }
    num += t;
  }
  MPoly den = one;
  for (std::size_t v = 0; v < p.nvars(); ++v) den = den * dpow[v][degs[v]];
  return {num, den};
}

MPoly specialize(const MPoly& p, const Rat& s0, const std::optional<Rat>& alpha0) {
  return p.map_coeffs([&](const FieldElem& c) { return specialize(c, s0, alpha0); });
}

MPoly homogenize(const MPoly& p, const std::string& h) {
  std::vector<std::string> vars = p.vars();
  vars.push_back(h);
  MPoly q = p.in_ring(vars);
  int d = p.total_degree();
  MPoly r(vars);
  for (const auto& [m, c] : q.terms()) {
    Monomial mm = m;
    mm.exp[vars.size() - 1] = static_cast<std::uint16_t>(d - int(m.degree()));
    r += MPoly::term(vars, mm, c);
  }
  return r;
}

}  // namespace k3pencil
