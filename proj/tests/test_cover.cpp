// SPDX-License-Identifier: MIT
#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "k3pencil/cover/cover.hpp"
#include "k3pencil/exactmath/parse.hpp"

using namespace k3pencil;

namespace {

std::vector<ProjPoint> base_points() {
  return {ProjPoint::of({1, 0, 0}), ProjPoint::of({0, 1, 0}), ProjPoint::of({1, 1, 2}), ProjPoint::of({-1, 1, 0})};
}

/// Specialize a coefficient of Q(s)(alpha) at s = -1/3, alpha = 2/3 (alpha^2 = s^2 - s = 4/9).
FieldElem at_test_fiber(const FieldElem& e) { return specialize(e, Rat(-1, 3), Rat(2, 3)); }

}  // namespace

TEST_CASE("all eight lifted lines satisfy w^2 = G0 G1 on the line") {
  BranchConfig c = BranchConfig::generic();
  auto lines = generic_lifted_lines();
  REQUIRE(lines.size() == 8);
  for (const auto& l : lines) {
    INFO(l.label);
    LiftCheck r = verify_component_lift(l, c);
    CHECK(r.pass);
    CHECK(r.residual.is_zero());
    CHECK(even_contact_test(l.line, c).even);
  }
}

TEST_CASE("lifted lines checked pointwise at a rational fiber") {
  // Oracle independent of restrict_to_line: evaluate at rational points of each
  // line at s = -1/3, where alpha = 2/3 is rational.
  BranchConfig c = BranchConfig::generic();
  for (const auto& l : generic_lifted_lines()) {
    INFO(l.label);
    MPoly line = l.line.map_coeffs(at_test_fiber);
    MPoly w = l.w_formula.map_coeffs(at_test_fiber);
    MPoly S = c.sextic.map_coeffs(at_test_fiber);
    // The lines are z = a x + b y, so (x, y, a x + b y) lies on them.
    FieldElem a = -line.coeff(parse_poly("x", plane_vars()).lead_monomial()) /
                  line.coeff(parse_poly("z", plane_vars()).lead_monomial());
    FieldElem b = -line.coeff(parse_poly("y", plane_vars()).lead_monomial()) /
                  line.coeff(parse_poly("z", plane_vars()).lead_monomial());
    for (long x = -2; x <= 2; ++x)
      for (long y = 1; y <= 3; ++y) {
        std::vector<FieldElem> p = {FieldElem(x), FieldElem(y), a * FieldElem(x) + b * FieldElem(y)};
        CHECK(line.eval(p).is_zero());
        FieldElem wv = w.eval(p);
        CHECK(wv * wv == S.eval(p));
      }
  }
}

TEST_CASE("a wrong w formula leaves a nonzero residual") {
  BranchConfig c = BranchConfig::generic();
  LiftedLine bad{"bad", parse_poly("z", plane_vars()), parse_poly("x*y*(x+y)", plane_vars())};
  LiftCheck r = verify_component_lift(bad, c);
  CHECK(!r.pass);
  CHECK(r.residual == parse_poly("3*x^2*y^2*(x+y)^2", {"x", "y"}).in_ring(r.residual.vars()));
}

TEST_CASE("even contact") {
  BranchConfig c = BranchConfig::generic();
  EvenContactResult r = even_contact_test(parse_poly("z", plane_vars()), c);
  CHECK(r.even);
  for (unsigned e : r.exponents) CHECK(e % 2 == 0);
  CHECK(!even_contact_test(parse_poly("z-x-2*y", plane_vars()), c).even);
  BranchConfig with_component = c;
  with_component.sextic = c.sextic * parse_poly("z", plane_vars());
  CHECK_THROWS_AS(even_contact_test(parse_poly("z", plane_vars()), with_component), std::invalid_argument);
}

TEST_CASE("line contacts at the base points match direct intersection multiplicities") {
  BranchConfig c = BranchConfig::generic();
  auto lines = generic_lifted_lines();
  auto pts = base_points();
  const int want[4][8] = {{2, 0, 4, 0, 0, 0, 2, 2}, {2, 4, 0, 0, 2, 2, 0, 0}, {0, 2, 2, 4, 0, 0, 0, 0},
                          {2, 0, 0, 2, 0, 0, 0, 0}};
  for (std::size_t p = 0; p < 4; ++p)
    for (std::size_t l = 0; l < 8; ++l) {
      INFO(lines[l].label << " at " << pts[p].to_string());
      int m = line_contact(lines[l].line, c.sextic, pts[p]);
      CHECK(m == want[p][l]);
      CHECK(m == intersection_multiplicity(lines[l].line, c.sextic, pts[p]));
    }
}

TEST_CASE("lifted line matrix") {
  auto m = lifted_line_matrix(generic_lifted_lines(), BranchConfig::generic(), base_points());
  REQUIRE(m.size() == 8);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      int want = i == j ? -2 : 0;
      std::size_t lo = std::min(i, j) + 1, hi = std::max(i, j) + 1;
      if ((lo == 4 && hi == 6) || (lo == 4 && hi == 8) || (lo == 5 && hi == 7) || (lo == 6 && hi == 8)) want = 1;
      CHECK(m[i][j] == want);
      CHECK(m[i][j] == m[j][i]);
    }
}

TEST_CASE("special fibers") {
  CHECK_THROWS(lifted_lines(BranchConfig::at(Rat(0))));
  for (long s : {1L, -1L, 2L}) {
    BranchConfig c = BranchConfig::at(Rat(s));
    auto lines = lifted_lines(c);
    CHECK(!lines.empty());
    for (const auto& l : lines) {
      INFO("s=" << s << " " << l.label);
      CHECK(verify_component_lift(l, c).pass);
    }
  }
  CHECK(lifted_lines(BranchConfig::at(Rat(1))).size() == 5);
}

TEST_CASE("chain model and Cremona pullbacks") {
  for (const auto& st : chain_model_check()) {
    INFO(st.step);
    CHECK(st.pass);
  }
  auto gamma = cremona_map();
  for (int i = 0; i < 2; ++i) {
    CremonaCheck c = cremona_pullback_check(i);
    CHECK(c.pass);
    CHECK(c.involution);
    CHECK(c.exceptional == std::vector<int>{1, 2, 2});
    CHECK(c.base_multiplicities == std::vector<int>{2, 2, 1});
  }
  // Involution at sample points, independent of the check above.
  for (auto p : {std::vector<long>{2, 3, 7}, std::vector<long>{-1, 4, 5}}) {
    std::vector<FieldElem> v(p.begin(), p.end());
    std::vector<FieldElem> g1, g2;
    for (const auto& g : gamma) g1.push_back(g.eval(v));
    for (const auto& g : gamma) g2.push_back(g.eval(g1));
    CHECK(ProjPoint(g2).same_as(ProjPoint(v)));
  }
}
