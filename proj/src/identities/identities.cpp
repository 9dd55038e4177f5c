// Copyright (c) k3pencil contributors. Licensed under the Apache License, Version 2.0.
#include "k3pencil/identities/identities.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "k3pencil/exactmath/parse.hpp"

namespace k3pencil {

namespace {

const std::vector<std::string> kXYZ = {"x", "y", "z"};
const std::vector<std::string> kUVW = {"u", "v", "w"};

MPoly P(std::string_view text, const std::vector<std::string>& vars = kXYZ) { return parse_poly(text, vars); }
PolyFraction F(std::string_view text, const std::vector<std::string>& vars = kXYZ) {
  return PolyFraction::of(P(text, vars));
}
PolyFraction frac(std::string_view num, std::string_view den, const std::vector<std::string>& vars = kXYZ) {
  return PolyFraction{P(num, vars), P(den, vars)};
}

FieldElem eval_fraction(const PolyFraction& f, const std::vector<FieldElem>& pt) {
  return f.num.eval(pt) / f.den.eval(pt);
}

/// Substitute every variable of the ring by a fraction.
PolyFraction compose(const PolyFraction& f, const std::vector<PolyFraction>& images) {
  Bindings b;
  for (std::size_t i = 0; i < images.size(); ++i) b.emplace(f.num.vars()[i], images[i]);
  return substitute(f.num, b) / substitute(f.den, b);
}

IdentityCheck finish(std::string id, PolyFraction lhs, PolyFraction rhs) {
  IdentityCheck c;
  c.id = std::move(id);
  c.residual = lhs.cross_residual(rhs);
  c.lhs = std::move(lhs);
  c.rhs = std::move(rhs);
  c.pass = c.residual.is_zero();
  return c;
}

void add_part(IdentityCheck& c, std::string name, bool ok) {
  c.parts.emplace_back(std::move(name), ok);
  c.pass = c.pass && ok;
}

std::vector<FieldElem> point(std::initializer_list<long> v) { return std::vector<FieldElem>(v.begin(), v.end()); }

}  // namespace

PolyFraction laurent_F() {
  return frac("x^2+1", "x") + frac("y^2+1", "y") + frac("z^2+1", "z");
}

PolyFraction sum_G() {
  return frac("1", "x^2-1") + frac("1", "y^2-1") + frac("1", "z^2-1");
}

IdentityCheck remarkable_identity_check() {
  std::vector<PolyFraction> cayley = {frac("1+x", "1-x"), frac("1+y", "1-y"), frac("1+z", "1-z")};
  PolyFraction lhs = F("4") * compose(sum_G(), cayley);
  PolyFraction rhs = laurent_F() - F("6");
  IdentityCheck c = finish("remarkable_identity", lhs, rhs);
  const auto pt = point({2, 3, 5});
  FieldElem l = eval_fraction(lhs, pt), r = eval_fraction(rhs, pt);
  c.notes.push_back("lhs(2,3,5): " + l.to_string());
  c.notes.push_back("rhs(2,3,5): " + r.to_string());
  add_part(c, "spot value at (2,3,5) is 151/30", l == r && l == FieldElem(Rat(151, 30)));
  // Single-variable building block: 1/(X^2 - 1) with X = (1+x)/(1-x) is (1-x)^2/(4x).
  PolyFraction one = compose(frac("1", "x^2-1"), cayley);
  add_part(c, "building block (1-x)^2/(4x)", one.equals(frac("(1-x)^2", "4*x")));
  c.excluded = {"x", "y", "z", "1 - x", "1 - y", "1 - z"};
  return c;
}

IdentityCheck mandelstam_surface_check() {
  PolyFraction lhs = frac("(1-x)^2", "x") + frac("(1-y)^2", "y") + frac("(1-z)^2", "z") + F("4");
  PolyFraction rhs = laurent_F() - F("2");
  IdentityCheck c = finish("mandelstam_surface", lhs, rhs);
  const auto one = point({1, 1, 1});
  add_part(c, "value 4 at (1,1,1)", eval_fraction(lhs, one) == FieldElem(4) && eval_fraction(rhs, one) == FieldElem(4));
  // Pencil map: 4(1 + s + G(cayley)) = F - (2 - 4s), so the pencil 1+s+G=0 becomes F = 2-4s.
  std::vector<PolyFraction> cayley = {frac("1+x", "1-x"), frac("1+y", "1-y"), frac("1+z", "1-z")};
  PolyFraction pencil = F("4") * (F("1+s") + compose(sum_G(), cayley));
  PolyFraction target = laurent_F() - F("2-4*s");
  MPoly r = pencil.cross_residual(target);
  c.notes.push_back("pencil residual: " + r.to_string());
  add_part(c, "1+s+G=0 maps to F=2-4s", r.is_zero());
  // The other sign: (x,y,z) -> (-x,-y,-z) negates F, so F = -(2-4s) is the same fibre.
  PolyFraction Fneg = compose(laurent_F(), {F("-x"), F("-y"), F("-z")});
  add_part(c, "F(-x,-y,-z) = -F", (Fneg + laurent_F()).num.is_zero());
  c.excluded = {"x", "y", "z"};
  return c;
}

IdentityCheck q_surface_check() {
  const std::vector<std::string> XY = {"x", "y"};
  const std::vector<std::string> XYZ = kXYZ;
  // Q^2 = (x+y)(1+xy)/(x+y-4xy+x^2y+xy^2) and z = (x+y)/Q, so z^2 = (x+y)^2 / Q^2.
  PolyFraction Q2 = frac("(x+y)*(1+x*y)", "x+y-4*x*y+x^2*y+x*y^2", XYZ);
  PolyFraction z2 = F("(x+y)^2") / Q2;
  PolyFraction lhs = z2 * F("1+x*y");
  PolyFraction rhs = F("(x+y)*(x+y-4*x*y+x^2*y+x*y^2)");
  IdentityCheck c = finish("q_surface", lhs, rhs);
  c.excluded = {"x + y", "1 + x*y", "x + y - 4*x*y + x^2*y + x*y^2"};
  MPoly D = P("x+y-4*x*y+x^2*y+x*y^2", XY);
  const std::vector<FieldElem> p11 = {FieldElem(1), FieldElem(1)};
  const std::vector<FieldElem> p21 = {FieldElem(2), FieldElem(1)};
  add_part(c, "(1,1) lies on the excluded locus", D.eval(p11).is_zero());
  FieldElem z2_at = eval_fraction(z2, {FieldElem(2), FieldElem(1), FieldElem(0)});
  c.notes.push_back("z^2 at (2,1): " + z2_at.to_string());
  MPoly eq1 = P("z^2*(1+x*y) - (x+y)*(x+y-4*x*y+x^2*y+x*y^2)");
  bool on = z2_at == FieldElem(1) && eq1.eval(point({2, 1, 1})).is_zero() && eq1.eval(point({2, 1, -1})).is_zero();
  add_part(c, "(2,1,+-1) on the quartic", on);
  return c;
}

IdentityCheck quartic_family_check() {
  PolyFraction lhs = F("x*y*z") * (laurent_F() - F("2-4*s"));
  PolyFraction rhs = F("x^2*y*z+y*z+x*y^2*z+x*z+x*y*z^2+x*y-(2-4*s)*x*y*z");
  IdentityCheck c = finish("quartic_family", lhs, rhs);
  PolyFraction at0 = PolyFraction{specialize(lhs.num, Rat(0)), specialize(lhs.den, Rat(0))};
  add_part(c, "s=0 gives xyz(F-2)", at0.equals(F("x*y*z") * (laurent_F() - F("2"))));
  return c;
}

IdentityCheck reciprocal_check() {
  PolyFraction f = F("1-(x^2*y^2+y^2*z^2+z^2*x^2)+2*x^2*y^2*z^2");
  // f(1/u, 1/v, 1/w) * (uvw)^2 in the ring (u, v, w).
  std::vector<PolyFraction> inv = {frac("1", "u", kUVW), frac("1", "v", kUVW), frac("1", "w", kUVW)};
  PolyFraction lhs = compose(f, inv) * F("u^2*v^2*w^2", kUVW);
  PolyFraction rhs = F("u^2*v^2*w^2-u^2-v^2-w^2+2", kUVW);
  IdentityCheck c = finish("reciprocal", lhs, rhs);
  // Clearing denominators of 1 + sum x^2/(1-x^2) gives f.
  PolyFraction henn = F("1") + frac("x^2", "1-x^2") + frac("y^2", "1-y^2") + frac("z^2", "1-z^2");
  PolyFraction cleared = henn * F("(1-x^2)*(1-y^2)*(1-z^2)");
  add_part(c, "clearing 1+sum x^2/(1-x^2) gives f", cleared.equals(f));
  c.excluded = {"u", "v", "w"};
  return c;
}

IdentityCheck symmetry_group_check() {
  MPoly R = P("u^2*v^2*w^2 - u^2 - v^2 - w^2 + 2 + s*(u^2-1)*(v^2-1)*(w^2-1)", kUVW);
  IdentityCheck c;
  c.id = "symmetry_group";
  c.lhs = c.rhs = PolyFraction::of(R);
  c.residual = MPoly(kUVW);
  std::array<int, 3> perm = {0, 1, 2};
  int count = 0;
  bool all = true;
  do {
    for (int signs = 0; signs < 8; ++signs) {
      std::vector<MPoly> img;
      for (int i = 0; i < 3; ++i) {
        MPoly v = MPoly::variable(kUVW, kUVW[perm[i]]);
        img.push_back((signs >> i) & 1 ? -v : v);
      }
      MPoly d = R.compose(img) - R;
      if (d.is_zero()) {
        ++count;
      } else {
        all = false;
        c.residual = d;
        c.notes.push_back("not invariant under permutation " + std::to_string(perm[0]) + std::to_string(perm[1]) +
                          std::to_string(perm[2]) + " signs " + std::to_string(signs));
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  c.notes.push_back("invariant substitutions: " + std::to_string(count));
  c.pass = all && count == 48;
  return c;
}

std::vector<IdentityCheck> all_identity_checks() {
  return {remarkable_identity_check(), mandelstam_surface_check(), q_surface_check(),
          quartic_family_check(),      reciprocal_check(),         symmetry_group_check()};
}

}  // namespace k3pencil
