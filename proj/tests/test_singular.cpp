// Copyright (c) k3pencil contributors. Licensed under the Apache License, Version 2.0.
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "k3pencil/cover/cover.hpp"
#include "k3pencil/exactmath/parse.hpp"
#include "k3pencil/singular/singular.hpp"

using namespace k3pencil;

namespace {

const std::vector<std::string> XYZ = {"x", "y", "z"};

std::vector<FieldElem> origin(std::size_t n) { return std::vector<FieldElem>(n, FieldElem(0)); }

std::vector<ProjPoint> base_points() {
  return {ProjPoint::of({1, 0, 0}), ProjPoint::of({0, 1, 0}), ProjPoint::of({1, 1, 2}), ProjPoint::of({-1, 1, 0})};
}

}  // namespace

TEST_CASE("ProjPoint equality is up to scaling") {
  CHECK(ProjPoint::of({2, 2, 4}).same_as(ProjPoint::of({1, 1, 2})));
  CHECK(!ProjPoint::of({1, 0, 0}).same_as(ProjPoint::of({0, 1, 0})));
  ProjPoint w({FieldElem(1), FieldElem(1), FieldElem(1), FieldElem(1)}, {1, 1, 1, 3});
  ProjPoint w2({FieldElem(-1), FieldElem(-1), FieldElem(-1), FieldElem(-1)}, {1, 1, 1, 3});
  CHECK(w.same_as(w2));
}

TEST_CASE("A_k normal forms") {
  CHECK(milnor_ade_classify(parse_poly("x^2+y^2+z^2", XYZ), origin(3)).k == 1);
  for (int k = 1; k <= 6; ++k) {
    MPoly f = parse_poly("x^2+y^2+z^" + std::to_string(k + 1), XYZ);
    auto r = milnor_ade_classify(f, origin(3));
    CHECK(r.k == k);
    CHECK(r.milnor_number == k);
  }
  // Not in normal form: the splitting lemma has to complete squares.
  CHECK(milnor_ade_classify(parse_poly("(x-y^2)^2+z^2+y^5", XYZ), origin(3)).k == 4);
  CHECK_THROWS_AS(milnor_ade_classify(parse_poly("x^3+y^3+z^2", XYZ), origin(3)), std::domain_error);
  ClassifyOptions low;
  low.jet_order = 3;
  CHECK_THROWS_AS(milnor_ade_classify(parse_poly("x^2+y^2+z^6", XYZ), origin(3), low), std::domain_error);
}

TEST_CASE("quartic Q singular locus: 8 points, A3 + 4 A2 + 3 A1") {
  SingularTable t = quartic_q_table();
  CHECK(t.locus.complete);
  CHECK(t.pass);
  REQUIRE(t.rows.size() == 8);
  int count[4] = {0, 0, 0, 0};
  for (const auto& r : t.rows) ++count[r.k];
  CHECK(count[3] == 1);
  CHECK(count[2] == 4);
  CHECK(count[1] == 3);
  // Direct recheck: all partials vanish at every confirmed point.
  MPoly Q = quartic_q();
  for (const auto& p : t.locus.confirmed)
    for (std::size_t v = 0; v < 4; ++v) CHECK(Q.derivative(v).eval(p.coords).is_zero());
  // Dropping a point leaves an eliminant factor with no lift.
  auto pts = quartic_q_expected();
  std::vector<ProjPoint> seven;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) seven.push_back(pts[i].point);
  LocusReport missing = verify_singular_locus(Q, seven);
  CHECK(!missing.complete);
  CHECK(!missing.witness.empty());
}

TEST_CASE("verify_singular_locus rejects non-homogeneous input and non-singular candidates") {
  CHECK_THROWS_AS(verify_singular_locus(parse_poly("x^2+y", XYZ), {}), std::invalid_argument);
  LocusReport r = verify_singular_locus(parse_poly("x*y*z", XYZ),
                                        {ProjPoint::of({1, 0, 0}), ProjPoint::of({0, 1, 0}), ProjPoint::of({0, 0, 1}),
                                         ProjPoint::of({1, 1, 1})});
  // A candidate that is not singular is reported and fails the verdict.
  CHECK(!r.complete);
  CHECK(r.rejected.size() == 1);
  CHECK(r.confirmed.size() == 3);
  LocusReport exact = verify_singular_locus(
      parse_poly("x*y*z", XYZ), {ProjPoint::of({1, 0, 0}), ProjPoint::of({0, 1, 0}), ProjPoint::of({0, 0, 1})});
  CHECK(exact.complete);
}

TEST_CASE("intersection multiplicities of the branch cubics") {
  CHECK(intersection_multiplicity(parse_poly("x", XYZ), parse_poly("y", XYZ), ProjPoint::of({0, 0, 1})) == 1);
  CHECK(intersection_multiplicity(parse_poly("y*z-x^2", XYZ), parse_poly("y", XYZ), ProjPoint::of({0, 0, 1})) == 2);
  MPoly G0 = branch_cubic(0), G1 = branch_cubic(1);
  std::vector<int> want = {3, 3, 2, 1};
  auto pts = base_points();
  int total = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    int m = intersection_multiplicity(G0, G1, pts[i]);
    CHECK(m == want[i]);
    CHECK(intersection_multiplicity(G1, G0, pts[i]) == m);
    total += m;
  }
  CHECK(total == 9);
  IntersectionCertificate c = certify_intersections(G0, G1, pts);
  CHECK(c.complete);
  CHECK(c.total == 9);
  CHECK(c.cofactor.is_constant());
  CHECK_THROWS_AS(intersection_multiplicity(G0, G0 * parse_poly("x", XYZ), pts[0]), std::domain_error);
}

TEST_CASE("intersection multiplicity is symmetric and additive on random curves") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> c(-3, 3);
  ProjPoint o = ProjPoint::of({0, 0, 1});
  for (int i = 0; i < 15; ++i) {
    // Cubic forms through (0:0:1).
    auto curve = [&] {
      std::string s = std::to_string(c(rng)) + "*x*z^2+" + std::to_string(c(rng)) + "*y*z^2+" +
                      std::to_string(c(rng)) + "*x^2*z+" + std::to_string(c(rng)) + "*y^3+x*y*z";
      return parse_poly(s, XYZ);
    };
    MPoly f = curve(), g = curve(), h = curve();
    int fg = 0, gf = 0, fh = 0, fgh = 0;
    try {
      fg = intersection_multiplicity(f, g, o);
      gf = intersection_multiplicity(g, f, o);
      fh = intersection_multiplicity(f, h, o);
      fgh = intersection_multiplicity(f, g * h, o);
    } catch (const std::domain_error&) {
      continue;
    }
    CHECK(fg == gf);
    CHECK(fgh == fg + fh);
  }
}

TEST_CASE("branch_ade_type and the direct classification agree") {
  CHECK(branch_ade_type(1) == 1);
  CHECK(branch_ade_type(2) == 3);
  CHECK(branch_ade_type(3) == 5);
  CHECK_THROWS(branch_ade_type(0));
  MPoly S = branch_cubic(0) * branch_cubic(1);
  auto pts = base_points();
  std::vector<int> contact = {3, 3, 2, 1};
  for (std::size_t i = 0; i < pts.size(); ++i)
    CHECK(classify_projective_point(S, pts[i]) == branch_ade_type(contact[i]));
}

TEST_CASE("branch cubic B0 is smooth for generic s") {
  LocusReport r = verify_singular_locus(branch_cubic(0), {});
  CHECK(r.complete);
}

TEST_CASE("jet order can be set through the environment") {
  CHECK(default_jet_order() >= 6);
}
