// SPDX-License-Identifier: MIT
#include "k3pencil/cover/cover.hpp"

#include <stdexcept>

#include "k3pencil/exactmath/parse.hpp"

namespace k3pencil {

namespace {

const std::vector<std::string> kUVW = {"u", "v", "w"};
const std::vector<std::string> kXY = {"x", "y"};

MPoly P(std::string_view text, AlphaSquare kind = AlphaSquare::s2_minus_s) {
  return parse_poly(text, plane_vars(), kind);
}

bool is_rational_square(const Rat& q, Rat& root) {
  if (q < 0) return false;
  mpz_class n = q.get_num(), d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  root = Rat(rn, rd);
  root.canonicalize();
  return true;
}

/// Free variables of a line chart in ring order.
std::pair<std::size_t, std::size_t> free_vars(std::size_t solved) {
  std::size_t a = solved == 0 ? 1 : 0;
  std::size_t b = solved == 2 ? 1 : 2;
  return {a, b};
}

bool same_sign_positive(const FieldElem& c) { return c.is_rational() && c.rational_value() > 0; }

}  // namespace

const std::vector<std::string>& plane_vars() {
  static const std::vector<std::string> v = {"x", "y", "z"};
  return v;
}

MPoly branch_cubic(int i, const std::optional<Rat>& s0) {
  if (i != 0 && i != 1) throw std::invalid_argument("branch cubic index must be 0 or 1");
  MPoly g = P("(x^2+y^2)*z - 2*x*y*(x+y) + (s+1-" + std::to_string(i) + ")*(2*x-z)*(2*y-z)*z");
  return s0 ? specialize(g, *s0) : g;
}

BranchConfig BranchConfig::generic() {
  BranchConfig c;
  c.G0 = branch_cubic(0);
  c.G1 = branch_cubic(1);
  c.sextic = c.G0 * c.G1;
  return c;
}

BranchConfig BranchConfig::at(const Rat& s0) {
  BranchConfig c;
  c.s_value = s0;
  c.G0 = branch_cubic(0, s0);
  c.G1 = branch_cubic(1, s0);
  c.sextic = c.G0 * c.G1;
  return c;
}

std::string BranchConfig::fiber_name() const { return s_value ? "s=" + to_string(*s_value) : "generic"; }

LineChart solve_line(const MPoly& line) {
  if (line.total_degree() != 1 || !line.is_homogeneous())
    throw std::invalid_argument("not a linear form: " + line.to_string());
  for (std::size_t v = 3; v-- > 0;) {
    Monomial m{};
    m.exp[v] = 1;
    FieldElem c = line.coeff(m);
    if (c.is_zero()) continue;
    LineChart ch;
    ch.solved = v;
    MPoly rest = line - MPoly::term(line.vars(), m, c);
    ch.expr = -(rest * c.inverse());
    return ch;
  }
  throw std::invalid_argument("zero linear form");
}

MPoly restrict_to_line(const MPoly& F, const MPoly& line) {
  LineChart ch = solve_line(line);
  return F.substitute_var(ch.solved, ch.expr);
}

EvenContactResult even_contact_test(const MPoly& line, const BranchConfig& config) {
  LineChart ch = solve_line(line);
  MPoly R = config.sextic.substitute_var(ch.solved, ch.expr);
  if (R.is_zero()) throw std::invalid_argument("line is a component of the sextic: " + line.to_string());
  auto [a, b] = free_vars(ch.solved);
  std::vector<std::optional<FieldElem>> fix(3);
  fix[ch.solved] = FieldElem(0);
  fix[b] = FieldElem(1);
  MPoly Ru = R.restrict(fix);
  FPoly u = to_fpoly(Ru, 0);

  EvenContactResult out;
  out.restriction = Ru;
  out.degree_drop = R.total_degree() - u.degree();
  out.unit = u.lead();
  bool even = out.degree_drop % 2 == 0;
  FPoly q(FieldElem(1));
  for (const auto& [f, e] : squarefree_factors(u)) {
    if (f.degree() <= 0) continue;
    out.exponents.push_back(e);
    if (e % 2) even = false;
    q = q * f.pow(e / 2);
  }
  out.even = even;
  if (even) {
    // Homogenize the square root to a cubic in the two free variables.
    const int d = R.total_degree() / 2;
    MPoly cert(config.sextic.vars());
    for (int k = 0; k <= q.degree(); ++k) {
      if (q.coeff(k).is_zero()) continue;
      Monomial m{};
      m.exp[a] = static_cast<std::uint16_t>(k);
      m.exp[b] = static_cast<std::uint16_t>(d - k);
      cert += MPoly::term(cert.vars(), m, q.coeff(k));
    }
    out.certificate = cert;
  }
  return out;
}

LiftCheck verify_component_lift(const LiftedLine& lift, const BranchConfig& config) {
  LiftCheck out;
  out.residual = restrict_to_line(config.sextic - lift.w_formula * lift.w_formula, lift.line);
  out.pass = out.residual.is_zero();
  return out;
}

int line_contact(const MPoly& line, const MPoly& sextic, const ProjPoint& pt) {
  if (!line.eval(pt.coords).is_zero()) return 0;
  LineChart ch = solve_line(line);
  MPoly R = sextic.substitute_var(ch.solved, ch.expr);
  if (R.is_zero()) throw std::invalid_argument("line is a component of the curve: " + line.to_string());
  auto [a, b] = free_vars(ch.solved);
  const auto& V = line.vars();
  MPoly lin = MPoly::variable(V, V[a]) * pt.coords[b] - MPoly::variable(V, V[b]) * pt.coords[a];
  int c = 0;
  while (auto q = R.try_divide(lin)) {
    R = *q;
    ++c;
  }
  return c;
}

ProjPoint line_meet(const MPoly& l1, const MPoly& l2) {
  auto coeffs = [](const MPoly& l) {
    std::array<FieldElem, 3> c;
    for (std::size_t v = 0; v < 3; ++v) {
      Monomial m{};
      m.exp[v] = 1;
      c[v] = l.coeff(m);
    }
    return c;
  };
  auto p = coeffs(l1), q = coeffs(l2);
  std::vector<FieldElem> x = {p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2], p[0] * q[1] - p[1] * q[0]};
  if (x[0].is_zero() && x[1].is_zero() && x[2].is_zero())
    throw std::invalid_argument("lines coincide: " + l1.to_string());
  return ProjPoint(x).normalized();
}

int lifted_line_intersection(const LiftedLine& a, const LiftedLine& b, const BranchConfig&,
                             const std::vector<ProjPoint>& excluded) {
  ProjPoint p = line_meet(a.line, b.line);
  for (const auto& e : excluded)
    if (p.same_as(e)) return 0;
  return a.w_formula.eval(p.coords) == b.w_formula.eval(p.coords) ? 1 : 0;
}

std::vector<std::vector<int>> lifted_line_matrix(const std::vector<LiftedLine>& lines, const BranchConfig& config,
                                                 const std::vector<ProjPoint>& excluded) {
  const std::size_t n = lines.size();
  std::vector<std::vector<int>> m(n, std::vector<int>(n, -2));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) m[i][j] = m[j][i] = lifted_line_intersection(lines[i], lines[j], config, excluded);
  return m;
}

std::vector<LiftedLine> generic_lifted_lines() {
  static const char* table[8][2] = {
      {"z", "2*x*y*(x+y)"},
      {"z - 2*x", "2*x^2*(x-y)"},
      {"z - 2*y", "2*y^2*(y-x)"},
      {"z - x - y", "alpha*(x-y)^2*(x+y)"},
      {"z - x/(s+alpha)", "x*y*(x-(alpha+s)*y)/s"},
      {"z - x/(s-alpha)", "x*y*(x+(alpha-s)*y)/s"},
      {"z - y/(s+alpha)", "x*y*(y-(alpha+s)*x)/s"},
      {"z - y/(s-alpha)", "x*y*(y+(alpha-s)*x)/s"},
  };
  std::vector<LiftedLine> out;
  for (int i = 0; i < 8; ++i) out.push_back({"L" + std::to_string(i + 1), P(table[i][0]), P(table[i][1])});
  return out;
}

std::vector<LiftedLine> lifted_lines(const BranchConfig& config) {
  if (!config.s_value) return generic_lifted_lines();
  const Rat& s0 = *config.s_value;
  if (s0 == 0) throw std::domain_error("s=0: lines over Q(s)(alpha) degenerate; use the reflection model");
  if (s0 == 1) {
    std::vector<LiftedLine> out;
    const char* lines[] = {"z", "z - 2*x", "z - 2*y", "z - x", "z - y"};
    for (int i = 0; i < 5; ++i) {
      MPoly l = P(lines[i]);
      EvenContactResult ec = even_contact_test(l, config);
      Rat root;
      if (!ec.even || !ec.unit.is_rational() || !is_rational_square(ec.unit.rational_value(), root))
        throw std::logic_error("line does not split over Q at s=1: " + l.to_string());
      MPoly w = ec.certificate * FieldElem(root);
      if (!same_sign_positive(w.lead_coeff())) w = -w;
      out.push_back({"L" + std::to_string(i + 1), l, w});
    }
    return out;
  }
  const Rat a2 = s0 * s0 - s0;
  std::optional<Rat> alpha0;
  if (a2 != 2) {
    Rat root;
    if (!is_rational_square(a2, root) || root == 0)
      throw std::domain_error("fiber " + config.fiber_name() + ": s^2-s is not a rational square");
    alpha0 = root;
  }
  std::vector<LiftedLine> out;
  for (const auto& L : generic_lifted_lines())
    out.push_back({L.label, specialize(L.line, s0, alpha0), specialize(L.w_formula, s0, alpha0)});
  return out;
}

MPoly pencil_surface() {
  return parse_poly("u^2*v^2*w^2 - u^2 - v^2 - w^2 + 2 + s*(u^2-1)*(v^2-1)*(w^2-1)", kUVW);
}

MPoly quartic_f(int i) {
  return parse_poly("(1 - x^2*y^2) + (s-" + std::to_string(i) + ")*(x^2-1)*(y^2-1)", kXY);
}

MPoly quartic_F(int i) { return homogenize(quartic_f(i), "z"); }

std::vector<IdentityResidual> chain_model_check() {
  std::vector<IdentityResidual> out;
  auto record = [&](std::string step, const MPoly& residual) {
    out.push_back({std::move(step), residual.is_zero(), residual.to_string()});
  };
  const std::vector<std::string> UVW = {"u", "v", "W"};
  // W stands for w^2; the surface is linear in it.
  MPoly PW = parse_poly("u^2*v^2*W - u^2 - v^2 - W + 2 + s*(u^2-1)*(v^2-1)*(W-1)", UVW);
  MPoly D = PW.derivative(2);
  std::vector<std::optional<FieldElem>> w0 = {std::nullopt, std::nullopt, FieldElem(0)};
  MPoly N = -PW.restrict(w0).in_ring(UVW);
  record("a: surface = W*den - num", PW - (MPoly::variable(UVW, "W") * D - N));
  MPoly Nprinted = parse_poly("u^2+v^2-2+s*(u^2*v^2-u^2-v^2+1)", UVW);
  MPoly Dprinted = parse_poly("u^2*v^2-1+s*(u^2*v^2-u^2-v^2+1)", UVW);
  record("a: numerator", N - Nprinted);
  record("a: denominator", D - Dprinted);
  MPoly R0 = parse_poly("u^2*v^2*w^2-u^2-v^2-w^2+2", kUVW);
  record("a: s=0 member", specialize(pencil_surface(), Rat(0)) - R0);

  Bindings inv;
  inv.emplace("u", PolyFraction{MPoly::constant(kXY, FieldElem(1)), MPoly::variable(kXY, "x")});
  inv.emplace("v", PolyFraction{MPoly::constant(kXY, FieldElem(1)), MPoly::variable(kXY, "y")});
  MPoly Nuv = Nprinted.in_ring({"u", "v"}), Duv = Dprinted.in_ring({"u", "v"});
  PolyFraction ratio = substitute(Nuv, inv) / substitute(Duv, inv);
  MPoly f0 = quartic_f(0), f1 = quartic_f(1);
  record("b: u=1/x, v=1/y gives f1/f0", ratio.cross_residual(PolyFraction{f1, f0}));
  MPoly x2y2 = parse_poly("x^2*y^2", kXY);
  PolyFraction num = substitute(Nuv, inv) * PolyFraction::of(x2y2);
  record("b: cleared numerator = f1", num.cross_residual(PolyFraction::of(f1)));

  PolyFraction rescaled = PolyFraction{f1, f0} * PolyFraction::of(f0 * f0);
  record("c: (w*f0)^2 = f1*f0", rescaled.cross_residual(PolyFraction::of(f1 * f0)));
  return out;
}

std::vector<MPoly> cremona_map() {
  const auto& V = plane_vars();
  std::vector<MPoly> Tinv = {P("x - z"), P("y - z"), P("z")};
  std::vector<MPoly> sigma = {P("y*z"), P("x*z"), P("x*y")};
  std::vector<MPoly> T = {P("x + z"), P("y + z"), P("z")};
  std::vector<MPoly> st;
  for (const auto& c : sigma) st.push_back(c.compose(Tinv));
  std::vector<MPoly> g;
  for (const auto& c : T) g.push_back(c.compose(st));
  (void)V;
  return g;
}

int point_multiplicity(const MPoly& F, const ProjPoint& pt) {
  if (F.is_zero()) throw std::invalid_argument("multiplicity of the zero polynomial");
  ProjPoint p = pt.normalized();
  std::size_t chart = 0;
  for (std::size_t i = p.dim(); i-- > 0;)
    if (!p.coords[i].is_zero()) {
      chart = i;
      break;
    }
  const auto& V = F.vars();
  std::vector<MPoly> sub;
  for (std::size_t i = 0; i < V.size(); ++i) {
    if (i == chart)
      sub.push_back(MPoly::constant(V, FieldElem(1)));
    else
      sub.push_back(MPoly::variable(V, V[i]) + MPoly::constant(V, p.coords[i]));
  }
  MPoly h = F.compose(sub);
  int low = -1;
  for (const auto& [m, c] : h.terms()) {
    int d = static_cast<int>(m.degree());
    if (low < 0 || d < low) low = d;
  }
  return low;
}

CremonaCheck cremona_pullback_check(int i) {
  CremonaCheck out;
  out.i = i;
  const auto g = cremona_map();
  MPoly F = quartic_F(i).in_ring(plane_vars());
  out.pullback = F.compose(g);
  MPoly rest = out.pullback;
  for (const char* lf : {"z", "x - z", "y - z"}) {
    MPoly l = P(lf);
    int e = 0;
    while (auto q = rest.try_divide(l)) {
      rest = *q;
      ++e;
    }
    out.exceptional.push_back(e);
  }
  out.residual_cubic = rest;
  MPoly G = branch_cubic(i);
  int esum = 0;
  for (int e : out.exceptional) esum += e;
  bool degree_ok = rest.total_degree() == 3 && esum == 5;
  bool prop = false;
  if (!rest.is_zero()) {
    out.factor = rest.lead_coeff() / G.lead_coeff();
    prop = rest == G * out.factor;
  }
  for (const auto& q : {ProjPoint::of({1, 0, 0}), ProjPoint::of({0, 1, 0}), ProjPoint::of({1, 1, 1})})
    out.base_multiplicities.push_back(point_multiplicity(F, q));

  std::vector<MPoly> gg;
  for (const auto& c : g) gg.push_back(c.compose(g));
  out.involution = true;
  const auto& V = plane_vars();
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t k = j + 1; k < 3; ++k)
      if (!(gg[j] * MPoly::variable(V, V[k]) - gg[k] * MPoly::variable(V, V[j])).is_zero()) out.involution = false;

  out.pass = degree_ok && prop && out.involution;
  if (!prop)
    out.details = "residual " + rest.to_string() + " is not proportional to " + G.to_string();
  else if (!degree_ok)
    out.details = "unexpected degree bookkeeping";
  else if (!out.involution)
    out.details = "gamma is not an involution";
  return out;
}

}  // namespace k3pencil
