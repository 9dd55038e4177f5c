// Copyright (c) k3pencil contributors. Licensed under the Apache License, Version 2.0.
#include <doctest.h>

#include <functional>
#include <stdexcept>

#include "k3pencil/lattice/lattice.hpp"

using namespace k3pencil;

namespace {

/// Reduce r into [0, m).
Rat mod(const Rat& r, long m) {
  Rat x = r / m;
  BigInt fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r - Rat(fl) * m;
}

/// All elements of the discriminant group as coefficient vectors.
std::vector<std::vector<long>> elements(const DiscriminantForm& f) {
  std::vector<std::vector<long>> out = {{}};
  for (const auto& o : f.orders) {
    std::vector<std::vector<long>> next;
    for (const auto& e : out)
      for (long k = 0; k < o.get_si(); ++k) {
        auto v = e;
        v.push_back(k);
        next.push_back(v);
      }
    out = next;
  }
  return out;
}

}  // namespace

TEST_CASE("determinants and signatures of standard summands") {
  struct Case {
    const char* spec;
    long det;
    std::size_t plus, minus;
  };
  for (const auto& c : std::vector<Case>{{"U", -1, 1, 1},
                                         {"E8", 1, 8, 0},
                                         {"E8(-1)", 1, 0, 8},
                                         {"E7", 2, 7, 0},
                                         {"E6", 3, 6, 0},
                                         {"D4", 4, 4, 0},
                                         {"D5", 4, 5, 0},
                                         {"A1", 2, 1, 0},
                                         {"A5", 6, 5, 0},
                                         {"<-12>", -12, 0, 1},
                                         {"U + <12>", -12, 2, 1}}) {
    INFO(c.spec);
    GramLattice L = standard_lattice(c.spec);
    CHECK(determinant(L.gram) == c.det);
    Signature s = rank_signature(L);
    CHECK(s.n_plus == c.plus);
    CHECK(s.n_minus == c.minus);
    CHECK(L.is_even());
  }
  CHECK(standard_lattice("U ⊕ E8(−1)² ⊕ ⟨−12⟩").gram == standard_lattice("U + E8(-1)^2 + <-12>").gram);
  CHECK_THROWS_AS(standard_lattice("U + Q7"), std::invalid_argument);
  CHECK_THROWS_AS(GramLattice(IntMatrix{{0, 1}, {2, 0}}), std::invalid_argument);
}

TEST_CASE("Smith normal form") {
  IntMatrix m{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  SmithForm s = smith_normal_form(m);
  CHECK(s.U * m * s.V == s.D);
  CHECK(s.U * s.U_inverse == IntMatrix::identity(3));
  CHECK(s.diagonal == std::vector<BigInt>{2, 6, 12});
  for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i)
    if (s.diagonal[i] != 0) CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
  CHECK(std::abs(determinant(s.U).get_si()) == 1);
  CHECK(std::abs(determinant(s.V).get_si()) == 1);
}

TEST_CASE("radical quotient") {
  GramLattice L(IntMatrix{{2, 0}, {0, 0}});
  CHECK(rank_signature(L).n_zero == 1);
  CHECK(radical_quotient(L).gram == IntMatrix{{2}});
  CHECK_THROWS(discriminant_group_form(L));
}

TEST_CASE("picard model of the generic fiber") {
  LatticeInvariants inv = lattice_invariants(standard_lattice("U + E8(-1)^2 + <-12>"));
  CHECK(inv.signature == Signature{19, 1, 18, 0});
  CHECK(inv.invariant_factors() == std::vector<BigInt>{12});
  CHECK(inv.abs_det == 12);
  REQUIRE(inv.form.q.size() == 1);
  // The generator of <-12>^* / <-12> is e/12 with q = -1/12 mod 2.
  CHECK(inv.form.q[0] == Rat(23, 12));
  LatticeInvariants t = complement_in_k3(inv);
  CHECK(fingerprints_match(t, lattice_invariants(standard_lattice("U + <12>"))));
}

TEST_CASE("discriminant forms: b(g,g) = q(g) mod 1 and q(g+h) - q(g) - q(h) = 2 b(g,h) mod 2") {
  for (const char* spec : {"U + E8(-1)^2 + <-12>", "U + E8(-1)^2 + <-4> + <-2>", "U + E8(-1)^2 + <-12> + <-2>",
                           "<2> + <4>", "<2> + <12>", "A5 + A3 + A1", "D5(-1) + <6>"}) {
    INFO(spec);
    DiscriminantForm f = lattice_invariants(standard_lattice(spec)).form;
    auto el = elements(f);
    for (const auto& g : el) {
      CHECK(mod(f.b_of(g, g) - f.q_of(g), 1) == 0);
      for (const auto& h : el) {
        std::vector<long> sum(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) sum[i] = g[i] + h[i];
        CHECK(mod(f.q_of(sum) - f.q_of(g) - f.q_of(h) - 2 * f.b_of(g, h), 2) == 0);
      }
    }
  }
}

TEST_CASE("form isomorphism distinguishes and identifies") {
  CHECK(!invariants_match(standard_lattice("U"), standard_lattice("<2> + <-2>")));
  CHECK(invariants_match(standard_lattice("<2> + <-2>"), standard_lattice("<-2> + <2>")));
  // Same group Z/12, different forms: <12> versus <-12> with signature fixed by U.
  auto a = lattice_invariants(standard_lattice("<12>")).form, b = lattice_invariants(standard_lattice("<-12>")).form;
  CHECK(!forms_isomorphic(a, b));
  CHECK(forms_isomorphic(a.negated(), b));
}

TEST_CASE("invariants survive random unimodular conjugation") {
  for (const char* spec : {"U + E8(-1)^2 + <-12>", "U + <12>", "<2> + <4>"}) {
    GramLattice L = standard_lattice(spec);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      IntMatrix U = random_unimodular(L.dim(), seed);
      CHECK(std::abs(determinant(U).get_si()) == 1);
      CHECK(invariants_match(L, conjugate(L, U)));
    }
  }
}
