// Copyright (c) k3pencil contributors. Licensed under the Apache License, Version 2.0.
#include <doctest.h>

#include "k3pencil/exactmath/parse.hpp"
#include "k3pencil/identities/identities.hpp"

using namespace k3pencil;

namespace {

FieldElem value(const PolyFraction& f, std::vector<FieldElem> p) { return f.num.eval(p) / f.den.eval(p); }

}  // namespace

TEST_CASE("every identity passes with a literally zero residual") {
  auto all = all_identity_checks();
  CHECK(all.size() == 6);
  for (const auto& c : all) {
    INFO(c.id);
    CHECK(c.pass);
    CHECK(c.residual.is_zero());
    for (const auto& [name, ok] : c.parts) {
      INFO(name);
      CHECK(ok);
    }
  }
}

TEST_CASE("Laurent polynomial and G at sample points") {
  // F(2,3,5) = 2 + 1/2 + 3 + 1/3 + 5 + 1/5 = 331/30, so F - 6 = 151/30.
  CHECK(value(laurent_F(), {FieldElem(2), FieldElem(3), FieldElem(5)}) == FieldElem(Rat(331, 30)));
  // Cayley images of 2, 3, 5 are -3, -2, -3/2: G = 1/8 + 1/3 + 4/5 = 151/120, and 4G = 151/30.
  CHECK(value(sum_G(), {FieldElem(-3), FieldElem(-2), FieldElem(Rat(-3, 2))}) == FieldElem(Rat(151, 120)));
}

TEST_CASE("remarkable identity at many rational points") {
  IdentityCheck c = remarkable_identity_check();
  for (long x = 2; x <= 4; ++x)
    for (long y = -3; y <= -2; ++y)
      for (long z : {5L, 7L}) {
        std::vector<FieldElem> p = {FieldElem(x), FieldElem(y), FieldElem(z)};
        CHECK(value(c.lhs, p) == value(c.rhs, p));
      }
}

TEST_CASE("q surface sample points") {
  // Independent evaluation of the quartic at (2, 1, +-1).
  MPoly eq = parse_poly("z^2*(1+x*y)-(x+y)*(x+y-4*x*y+x^2*y+x*y^2)", {"x", "y", "z"});
  CHECK(eq.eval(std::vector<FieldElem>{FieldElem(2), FieldElem(1), FieldElem(1)}).is_zero());
  CHECK(eq.eval(std::vector<FieldElem>{FieldElem(2), FieldElem(1), FieldElem(-1)}).is_zero());
  IdentityCheck c = q_surface_check();
  CHECK(c.excluded.size() == 3);
}

TEST_CASE("symmetry group has 48 elements") {
  IdentityCheck c = symmetry_group_check();
  CHECK(c.pass);
  CHECK(c.notes.back() == "invariant substitutions: 48");
}
