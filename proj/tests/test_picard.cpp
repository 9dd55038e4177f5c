// SPDX-License-Identifier: MIT
#include <doctest.h>

#include <algorithm>

#include "k3pencil/picard/picard.hpp"

using namespace k3pencil;

namespace {

/// Negated Cartan matrix of A_n.
IntMatrix neg_cartan_a(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = -2;
    if (i + 1 < n) m(i, i + 1) = m(i + 1, i) = 1;
  }
  return m;
}

IntMatrix block(const IntMatrix& g, std::size_t from, std::size_t len) {
  IntMatrix b(len, len);
  for (std::size_t i = 0; i < len; ++i)
    for (std::size_t j = 0; j < len; ++j) b(i, j) = g(from + i, from + j);
  return b;
}

}  // namespace

TEST_CASE("singularity tables of the three fibers") {
  for (const char* f : {"generic", "s1", "s-1"}) {
    INFO(f);
    FiberData d = fiber_data(f);
    SingularTableCheck c = check_singular_table(d);
    CHECK(c.pass);
  }
  CHECK(fiber_data("generic").singular.size() == 4);
  CHECK(fiber_data("s1").singular.size() == 7);
  CHECK(fiber_data("s-1").singular.size() == 5);
  CHECK_THROWS(fiber_data("s2"));
}

TEST_CASE("generic divisor configuration") {
  DivisorConfig c = build_divisor_config("generic");
  CHECK(c.labels.size() == 23);
  CHECK(c.slots.size() == 7);
  IntMatrix g = c.complete(std::vector<int>(c.slots.size(), 0));
  CHECK(g.is_symmetric());
  std::size_t H = c.index_of("H");
  CHECK(g(H, H) == 2);
  CHECK(g(H, c.index_of("L3")) == 1);
  CHECK(g(c.index_of("E1,1"), c.index_of("E1,2")) == 1);
  CHECK(g(c.index_of("E1,1"), c.index_of("E1,-1")) == 0);
  // Exceptional chains are negated Cartan blocks A5, A5, A3, A1.
  std::vector<std::size_t> lengths = {5, 5, 3, 1};
  REQUIRE(c.chains.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(c.chains[i].second == lengths[i]);
    CHECK(block(g, c.chains[i].first, c.chains[i].second) == neg_cartan_a(lengths[i]));
  }
  CHECK_THROWS(c.index_of("E9,0"));
}

TEST_CASE("generic enumeration: 4 of 128 survive with rank 19") {
  DivisorConfig c = build_divisor_config("generic");
  FiberResult r = enumerate_and_filter(c);
  CHECK(r.assignments == 128);
  REQUIRE(r.survivors.size() == 4);
  for (const auto& s : r.survivors) {
    CHECK(s.rank == 19);
    CHECK(c.labels.size() - s.rank == 4);
  }
  CHECK(r.invariants.signature == Signature{19, 1, 18, 0});
  CHECK(r.invariants.invariant_factors() == std::vector<BigInt>{12});
  CHECK(fingerprints_match(r.invariants, lattice_invariants(standard_lattice(picard_model("generic")))));
  CHECK(fingerprints_match(transcendental_invariants(r),
                           lattice_invariants(standard_lattice(transcendental_model("generic")))));
  // The answer does not depend on the number of workers.
  FiberResult one = enumerate_and_filter(c, 20, 1);
  CHECK(one.survivors.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) CHECK(one.survivors[i].bits == r.survivors[i].bits);
}

TEST_CASE("flipping a whole exceptional chain keeps the invariants of every survivor") {
  DivisorConfig c = build_divisor_config("generic");
  FiberResult r = enumerate_and_filter(c);
  for (const auto& s : r.survivors)
    for (std::size_t p = 0; p < c.chains.size(); ++p) {
      IntMatrix flipped = chain_flip(c, s.gram, p);
      CHECK(flipped.is_symmetric());
      CHECK(rank(flipped) == s.rank);
      CHECK(invariants_match(GramLattice(flipped), GramLattice(s.gram)));
    }
}

TEST_CASE("special fibers") {
  struct Case {
    const char* fiber;
    std::size_t labels;
    long det;
  };
  for (const auto& k : {Case{"s1", 23, 8}, Case{"s-1", 24, 24}}) {
    INFO(k.fiber);
    DivisorConfig c = build_divisor_config(k.fiber);
    CHECK(c.labels.size() == k.labels);
    FiberResult r = enumerate_and_filter(c);
    REQUIRE(!r.survivors.empty());
    CHECK(r.survivors.front().rank == 20);
    CHECK(r.invariants.abs_det == k.det);
    CHECK(fingerprints_match(r.invariants, lattice_invariants(standard_lattice(picard_model(k.fiber)))));
    CHECK(fingerprints_match(transcendental_invariants(r),
                             lattice_invariants(standard_lattice(transcendental_model(k.fiber)))));
  }
}

TEST_CASE("reflection isomorphisms") {
  for (auto [a, b] : {std::pair{0, 1}, {2, -1}}) {
    ReflectionCheck r = reflection_isomorphism_check(Rat(a), Rat(b));
    CHECK(r.pass);
    // The axis x + y - z = 0 is fixed pointwise: (1:0:1) and (0:1:1) map to themselves.
    for (auto p : {std::vector<long>{1, 0, 1}, std::vector<long>{0, 1, 1}}) {
      std::vector<FieldElem> img(3);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) img[i] += FieldElem(Rat(r.matrix(i, j))) * FieldElem(p[j]);
      CHECK(ProjPoint(img).same_as(ProjPoint(std::vector<FieldElem>(p.begin(), p.end()))));
    }
    // Involution.
    CHECK(r.matrix * r.matrix == IntMatrix::identity(3));
  }
  CHECK(!reflection_isomorphism_check(Rat(3), Rat(1)).pass);
}
