#include "k3pencil/singular/singular.hpp"

#include <cstdlib>
#include <stdexcept>

#include "k3pencil/exactmath/parse.hpp"
#include "k3pencil/singular/elimination.hpp"

namespace k3pencil {

// ---------------------------------------------------------------- ProjPoint

ProjPoint::ProjPoint(std::vector<FieldElem> c, std::vector<int> w) : coords(std::move(c)), weights(std::move(w)) {
  bool any = false;
  for (const auto& x : coords) any = any || !x.is_zero();
  if (!any) throw std::invalid_argument("projective point with all coordinates zero");
  if (!weights.empty() && weights.size() != coords.size())
    throw std::invalid_argument("weight list does not match the coordinates");
}

ProjPoint ProjPoint::of(std::initializer_list<long> c) {
  std::vector<FieldElem> v;
  for (long x : c) v.emplace_back(x);
  return ProjPoint(std::move(v));
}

ProjPoint ProjPoint::normalized() const {
  for (std::size_t i = coords.size(); i-- > 0;) {
    if (coords[i].is_zero()) continue;
    if (!weights.empty() && weights[i] != 1) continue;
    FieldElem inv = coords[i].inverse();
    ProjPoint r(*this);
    for (std::size_t j = 0; j < coords.size(); ++j) {
      int w = weights.empty() ? 1 : weights[j];
      for (int k = 0; k < w; ++k) r.coords[j] *= inv;
    }
    return r;
  }
  return *this;
}

bool ProjPoint::same_as(const ProjPoint& o) const {
  if (coords.size() != o.coords.size() || weights != o.weights) return false;
  bool unweighted = true;
  for (int w : weights) unweighted = unweighted && w == 1;
  if (unweighted) {
    for (std::size_t i = 0; i < coords.size(); ++i)
      for (std::size_t j = i + 1; j < coords.size(); ++j)
        if (!(coords[i] * o.coords[j] - coords[j] * o.coords[i]).is_zero()) return false;
    return true;
  }
  ProjPoint a = normalized(), b = o.normalized();
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (!(a.coords[i] == b.coords[i])) return false;
  return true;
}

std::string ProjPoint::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ":";
    out += coords[i].to_string();
  }
  return out + ")";
}

int default_jet_order() {
  if (const char* env = std::getenv("K3PENCIL_JET_ORDER")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 2 && v <= 200) return int(v);
  }
  return 10;
}

int branch_ade_type(int contact) {
  if (contact < 1) throw std::invalid_argument("contact order must be positive (no singularity for n = 0)");
  return 2 * contact - 1;
}

// ------------------------------------------------------------ classification

namespace {

using Matrix = std::vector<std::vector<FieldElem>>;

/// Congruence diagonalization: returns A with A^T H A diagonal; the
/// nonzero diagonal entries come first.
Matrix diagonalize(Matrix H, std::vector<FieldElem>& diag) {
  const std::size_t n = H.size();
  Matrix A(n, std::vector<FieldElem>(n));
  for (std::size_t i = 0; i < n; ++i) A[i][i] = FieldElem(1);
  // Column operation on A and congruence on H: e_j += c * e_k.
  auto add_col = [&](std::size_t j, std::size_t k, const FieldElem& c) {
    for (std::size_t r = 0; r < n; ++r) A[r][j] += c * A[r][k];
    for (std::size_t r = 0; r < n; ++r) H[r][j] += c * H[r][k];
    for (std::size_t r = 0; r < n; ++r) H[j][r] += c * H[k][r];
  };
  auto swap_idx = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < n; ++r) std::swap(A[r][i], A[r][j]);
    std::swap(H[i], H[j]);
    for (std::size_t r = 0; r < n; ++r) std::swap(H[r][i], H[r][j]);
  };
  diag.clear();
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t piv = n;
    for (std::size_t j = i; j < n && piv == n; ++j)
      if (!H[j][j].is_zero()) piv = j;
    if (piv == n) {
      for (std::size_t j = i; j < n && piv == n; ++j)
        for (std::size_t k = i; k < n; ++k)
          if (k != j && !H[j][k].is_zero()) {
            add_col(j, k, FieldElem(1));
            piv = j;
            break;
          }
    }
    if (piv == n) break;
    swap_idx(i, piv);
    for (std::size_t k = i + 1; k < n; ++k)
      if (!H[k][i].is_zero()) add_col(k, i, -(H[k][i] / H[i][i]));
    diag.push_back(H[i][i]);
  }
  return A;
}

using Series = std::vector<FieldElem>;  // truncated power series in t

Series series_mul(const Series& a, const Series& b, std::size_t len) {
  Series out(len);
  for (std::size_t i = 0; i < a.size() && i < len; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size() && i + j < len; ++j)
      if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
  }
  return out;
}

/// Evaluate p(y_0, ..., y_{n-1}) with every y_i a truncated series.
Series eval_series(const MPoly& p, const std::vector<Series>& ys, std::size_t len) {
  std::vector<std::vector<Series>> pw(p.nvars());
  for (std::size_t v = 0; v < p.nvars(); ++v) {
    Series one(len);
    one[0] = FieldElem(1);
    pw[v].push_back(one);
    for (int k = 1; k <= p.degree_in(v); ++k) pw[v].push_back(series_mul(pw[v].back(), ys[v], len));
  }
  Series out(len);
  for (const auto& [m, c] : p.terms()) {
    Series t(len);
    t[0] = c;
    for (std::size_t v = 0; v < p.nvars(); ++v)
      if (m.exp[v]) t = series_mul(t, pw[v][m.exp[v]], len);
    for (std::size_t i = 0; i < len; ++i)
      if (!t[i].is_zero()) out[i] += t[i];
  }
  return out;
}

}  // namespace

SingularityReport milnor_ade_classify(const MPoly& f, const std::vector<FieldElem>& point,
                                      const ClassifyOptions& opt) {
  const std::size_t n = f.nvars();
  if (n < 2 || n > 3) throw std::invalid_argument("classification needs 2 or 3 variables");
  if (point.size() != n) throw std::invalid_argument("point dimension does not match");
  const auto& vars = f.vars();

  std::vector<MPoly> shift;
  for (std::size_t i = 0; i < n; ++i)
    shift.push_back(MPoly::variable(vars, vars[i]) + MPoly::constant(vars, point[i]));
  MPoly g = f.compose(shift);

  Monomial zero{};
  if (!g.coeff(zero).is_zero()) throw std::domain_error("point is not on the hypersurface");
  for (std::size_t i = 0; i < n; ++i) {
    Monomial m;
    m.exp[i] = 1;
    if (!g.coeff(m).is_zero()) throw std::domain_error("point is not a critical point");
  }

  Matrix H(n, std::vector<FieldElem>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Monomial m;
      ++m.exp[i];
      ++m.exp[j];
      H[i][j] = g.coeff(m) * FieldElem(i == j ? 2 : 1);
    }
  std::vector<FieldElem> d;
  Matrix A = diagonalize(H, d);
  const std::size_t corank = n - d.size();
  // Report the affine point as (point : 1).
  std::vector<FieldElem> hom = point;
  hom.emplace_back(1);
  ProjPoint where(std::move(hom));
  if (corank == 0) return {where, 1, 1};
  if (corank >= 2) throw std::domain_error("not of type A (corank " + std::to_string(corank) + ")");

  // New coordinates: old = A * new. The last new coordinate t spans the kernel.
  std::vector<MPoly> lin;
  for (std::size_t i = 0; i < n; ++i) {
    MPoly e(vars);
    for (std::size_t j = 0; j < n; ++j)
      if (!A[i][j].is_zero()) e += MPoly::variable(vars, vars[j]) * A[i][j];
    lin.push_back(e);
  }
  MPoly h = g.compose(lin);

  // Solve dh/dy_i = 0 (i < n-1) for y_i(t) by fixed-point iteration; each
  // pass fixes at least one more coefficient since dh/dy_i = d_i y_i + O(2).
  const std::size_t len = static_cast<std::size_t>(opt.jet_order) + 1;
  std::vector<Series> ys(n, Series(len));
  ys[n - 1][1] = FieldElem(1);
  std::vector<MPoly> grads;
  for (std::size_t i = 0; i + 1 < n; ++i) grads.push_back(h.derivative(i));
  for (std::size_t it = 0; it < len + 1; ++it) {
    std::vector<Series> next = ys;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      Series r = eval_series(grads[i], ys, len);
      FieldElem inv = d[i].inverse();
      for (std::size_t k = 0; k < len; ++k) next[i][k] -= r[k] * inv;
    }
    ys = std::move(next);
  }
  Series germ = eval_series(h, ys, len);
  for (std::size_t k = 0; k < len; ++k) {
    if (germ[k].is_zero()) continue;
    int kk = int(k) - 1;
    if (kk < 2) throw std::logic_error("inconsistent splitting-lemma reduction");
    return {where, kk, kk};
  }
  throw std::domain_error("jet order exceeded (N=" + std::to_string(opt.jet_order) + ")");
}

// ------------------------------------------------------ intersection numbers

namespace {

int fulton(MPoly F, MPoly G, int& budget) {
  const auto& vars = F.vars();
  const std::vector<FieldElem> origin(2);
  // A zero curve appears exactly when the reduction meets a shared component.
  if (F.is_zero() || G.is_zero()) throw std::domain_error("infinite intersection multiplicity");
  if (!F.eval(origin).is_zero() || !G.eval(origin).is_zero()) return 0;
  const std::vector<std::optional<FieldElem>> on_x_axis{std::nullopt, FieldElem(0)};
  MPoly x = MPoly::variable(vars, vars[0]);
  MPoly y = MPoly::variable(vars, vars[1]);
  while (true) {
    if (--budget < 0) throw std::domain_error("infinite intersection multiplicity");
    FPoly fx = to_fpoly(F.restrict(on_x_axis), 0);
    FPoly gx = to_fpoly(G.restrict(on_x_axis), 0);
    int r = fx.is_zero() ? 0 : fx.degree();
    int s = gx.is_zero() ? 0 : gx.degree();
    if (r > s) {
      std::swap(F, G);
      std::swap(fx, gx);
      std::swap(r, s);
    }
    if (r == 0) {
      if (gx.is_zero()) throw std::domain_error("infinite intersection multiplicity");
      MPoly H = F.divide_exact(y);
      return gx.low_order() + fulton(std::move(H), std::move(G), budget);
    }
    MPoly shift = x.pow(static_cast<unsigned>(s - r));
    G = G * fx.lead() - shift * F * gx.lead();
  }
}

}  // namespace

int intersection_multiplicity(const MPoly& F, const MPoly& G, const ProjPoint& P) {
  MPoly f, g;
  std::vector<FieldElem> at;
  if (F.nvars() == 3) {
    if (P.dim() != 3) throw std::invalid_argument("point dimension does not match");
    std::size_t chart = 3;
    for (std::size_t i = 3; i-- > 0;)
      if (!P.coords[i].is_zero()) {
        chart = i;
        break;
      }
    std::vector<std::optional<FieldElem>> fix(3);
    fix[chart] = FieldElem(1);
    f = F.restrict(fix);
    g = G.in_ring(F.vars()).restrict(fix);
    FieldElem inv = P.coords[chart].inverse();
    for (std::size_t i = 0; i < 3; ++i)
      if (i != chart) at.push_back(P.coords[i] * inv);
  } else if (F.nvars() == 2) {
    f = F;
    g = G.in_ring(F.vars());
    at = P.coords;
    if (at.size() != 2) throw std::invalid_argument("affine point must have two coordinates");
  } else {
    throw std::invalid_argument("plane curves expected");
  }
  std::vector<MPoly> shift;
  for (std::size_t i = 0; i < 2; ++i)
    shift.push_back(MPoly::variable(f.vars(), f.vars()[i]) + MPoly::constant(f.vars(), at[i]));
  int budget = 10000;
  return fulton(f.compose(shift), g.compose(shift), budget);
}

// --------------------------------------------------------- singular locus

LocusReport verify_singular_locus(const MPoly& F, const std::vector<ProjPoint>& candidates) {
  if (F.is_zero() || !F.is_homogeneous()) throw std::invalid_argument("verify_singular_locus: polynomial is not homogeneous");
  const std::size_t n = F.nvars();
  std::vector<MPoly> partials;
  for (std::size_t v = 0; v < n; ++v) partials.push_back(F.derivative(v));

  LocusReport rep;
  for (const auto& c : candidates) {
    if (c.dim() != n) throw std::invalid_argument("candidate dimension does not match");
    bool sing = F.eval(c.coords).is_zero();
    for (const auto& p : partials) sing = sing && p.eval(c.coords).is_zero();
    (sing ? rep.confirmed : rep.rejected).push_back(c);
  }

  for (std::size_t k = n; k-- > 0;) {
    std::vector<std::optional<FieldElem>> fix(n);
    fix[k] = FieldElem(1);
    for (std::size_t j = k + 1; j < n; ++j) fix[j] = FieldElem(0);
    std::vector<std::vector<FieldElem>> chart_pts;
    for (const auto& c : rep.confirmed) {
      bool in_chart = !c.coords[k].is_zero();
      for (std::size_t j = k + 1; j < n; ++j) in_chart = in_chart && c.coords[j].is_zero();
      if (!in_chart) continue;
      FieldElem inv = c.coords[k].inverse();
      std::vector<FieldElem> a;
      for (std::size_t j = 0; j < k; ++j) a.push_back(c.coords[j] * inv);
      chart_pts.push_back(std::move(a));
    }
    std::vector<MPoly> eqs;
    for (const auto& p : partials) eqs.push_back(p.restrict(fix));
    std::string chart = F.vars()[k] + "=1";
    for (std::size_t j = k + 1; j < n; ++j) chart += "," + F.vars()[j] + "=0";
    if (k == 0) {
      bool all_zero = true;
      for (const auto& e : eqs) all_zero = all_zero && e.is_zero();
      if (all_zero && chart_pts.empty()) {
        rep.witness = "chart " + chart + ": coordinate point is singular but not listed";
        return rep;
      }
      continue;
    }
    ZeroSetCertificate cert = certify_zero_set(eqs, chart_pts);
    for (auto& d : cert.degenerate_s) rep.degenerate_s.push_back(d);
    if (!cert.ok) {
      rep.witness = "chart " + chart + ": " + cert.witness;
      return rep;
    }
  }
  rep.complete = rep.rejected.empty();
  if (!rep.complete) rep.witness = "candidate " + rep.rejected.front().to_string() + " is not singular";
  return rep;
}

IntersectionCertificate certify_intersections(const MPoly& F, const MPoly& G,
                                              const std::vector<ProjPoint>& candidates) {
  if (F.nvars() != 3) throw std::invalid_argument("plane curves in three homogeneous variables expected");
  MPoly Gr = G.in_ring(F.vars());
  const std::vector<FieldElem> center{FieldElem(0), FieldElem(0), FieldElem(1)};
  if (F.eval(center).is_zero() || Gr.eval(center).is_zero())
    throw std::invalid_argument("projection center (0:0:1) lies on a curve");
  IntersectionCertificate cert;
  const auto& vars = F.vars();
  cert.eliminant = resultant(F, Gr, vars[2]);
  MPoly prod = MPoly::constant(vars, FieldElem(1));
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const auto& P = candidates[i];
    for (std::size_t j = 0; j < i; ++j) {
      const auto& Q = candidates[j];
      if ((P.coords[0] * Q.coords[1] - P.coords[1] * Q.coords[0]).is_zero()) {
        cert.witness = "candidates " + Q.to_string() + " and " + P.to_string() + " share a projection line";
        return cert;
      }
    }
    int m = intersection_multiplicity(F, Gr, P);
    cert.multiplicities.push_back(m);
    cert.total += m;
    MPoly l = MPoly::variable(vars, vars[0]) * P.coords[1] - MPoly::variable(vars, vars[1]) * P.coords[0];
    prod = prod * l.pow(static_cast<unsigned>(m));
  }
  auto q = cert.eliminant.try_divide(prod);
  if (!q) {
    cert.witness = "eliminant is not divisible by the candidate product";
    return cert;
  }
  cert.cofactor = *q;
  int bezout = F.total_degree() * Gr.total_degree();
  if (!q->is_constant() || q->is_zero()) {
    cert.witness = "eliminant cofactor " + q->to_string() + " has further roots";
  } else if (cert.total != bezout) {
    cert.witness = "multiplicities sum to " + std::to_string(cert.total) + ", expected " + std::to_string(bezout);
  } else {
    cert.complete = true;
  }
  return cert;
}

int classify_projective_point(const MPoly& F, const ProjPoint& P, const ClassifyOptions& opt) {
  const std::size_t n = F.nvars();
  if (P.dim() != n) throw std::invalid_argument("point and polynomial dimensions differ");
  std::size_t chart = n;
  for (std::size_t i = n; i-- > 0;)
    if (!P.coords[i].is_zero()) {
      chart = i;
      break;
    }
  if (chart == n) throw std::invalid_argument("zero point");
  std::vector<std::optional<FieldElem>> fix(n);
  fix[chart] = FieldElem(1);
  std::vector<FieldElem> affine;
  for (std::size_t i = 0; i < n; ++i)
    if (i != chart) affine.push_back(P.coords[i] / P.coords[chart]);
  return milnor_ade_classify(F.restrict(fix), affine, opt).k;
}

MPoly quartic_q() {
  return parse_poly("z^2*(w^2+x*y)-(x+y)*((x+y)*w^2-4*x*y*w+x^2*y+x*y^2)", {"x", "y", "z", "w"});
}

std::vector<SingularityReport> quartic_q_expected() {
  std::vector<SingularityReport> rows;
  auto add = [&](std::initializer_list<long> c, int k) {
    SingularityReport r;
    r.point = ProjPoint::of(c);
    r.k = r.milnor_number = k;
    rows.push_back(r);
  };
  add({0, 0, 0, 1}, 3);
  add({0, 1, 1, 0}, 2);
  add({0, 1, -1, 0}, 2);
  add({1, 0, 1, 0}, 2);
  add({1, 0, -1, 0}, 2);
  add({1, 1, 0, 1}, 1);
  add({0, 0, 1, 0}, 1);
  add({1, -1, 0, 0}, 1);
  return rows;
}

SingularTable quartic_q_table() {
  SingularTable out;
  const MPoly Q = quartic_q();
  const auto expected = quartic_q_expected();
  std::vector<ProjPoint> candidates;
  for (const auto& r : expected) candidates.push_back(r.point);
  out.locus = verify_singular_locus(Q, candidates);
  bool ok = out.locus.complete && out.locus.rejected.empty();
  std::string why = ok ? "" : "locus incomplete: " + out.locus.witness + "; ";
  for (const auto& e : expected) {
    SingularityReport r;
    r.point = e.point;
    r.k = r.milnor_number = classify_projective_point(Q, e.point);
    if (r.k != e.k) {
      ok = false;
      why += e.point.to_string() + " is " + r.type() + " not " + e.type() + "; ";
    }
    out.rows.push_back(r);
  }
  out.pass = ok;
  out.details = why;
  return out;
}

}  // namespace k3pencil
