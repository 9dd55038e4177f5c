// SPDX-License-Identifier: MIT
#include <doctest.h>

#include <stdexcept>

#include "k3pencil/series/series.hpp"

using namespace k3pencil;

namespace {

Rat A(unsigned n) { return Rat(apery(n)); }
Rat B(unsigned n) { return Rat(domb(n)); }

bool has_root(const Singularities& s, const QuadraticSurd& r) {
  for (const auto& x : s.roots)
    if (x == r) return true;
  return false;
}

}  // namespace

TEST_CASE("Apery numbers against the classical three-term recurrence") {
  CHECK(apery(0) == 1);
  CHECK(apery(1) == 5);
  CHECK(apery(2) == 73);
  CHECK(apery(3) == 1445);
  CHECK(apery(4) == 33001);
  // n^3 u_n = (34n^3 - 51n^2 + 27n - 5) u_{n-1} - (n-1)^3 u_{n-2}
  for (long n = 2; n <= 40; ++n) {
    BigInt lhs = BigInt(n * n * n) * apery(n);
    BigInt rhs = BigInt(34 * n * n * n - 51 * n * n + 27 * n - 5) * apery(n - 1) -
                 BigInt((n - 1) * (n - 1) * (n - 1)) * apery(n - 2);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("sum_a and domb against independent recurrences") {
  const long a_vals[] = {1, 3, 15, 93, 639};
  const long b_vals[] = {1, 6, 90, 1860, 44730};
  for (unsigned n = 0; n < 5; ++n) {
    CHECK(sum_a(n) == a_vals[n]);
    CHECK(domb(n) == b_vals[n]);
  }
  // (n+1)^2 a_{n+1} = (10n^2 + 10n + 3) a_n - 9 n^2 a_{n-1}
  for (long n = 1; n <= 40; ++n)
    CHECK(BigInt((n + 1) * (n + 1)) * sum_a(n + 1) ==
          BigInt(10 * n * n + 10 * n + 3) * sum_a(n) - BigInt(9 * n * n) * sum_a(n - 1));
  for (unsigned n = 0; n <= 30; ++n) {
    BigInt c;
    mpz_bin_uiui(c.get_mpz_t(), 2 * n, n);
    CHECK(domb(n) == c * sum_a(n));
  }
}

TEST_CASE("theta operators act on series") {
  ThetaOperator op("x");
  op.add(0, UPoly(std::vector<Rat>{0, 1}));  // theta
  PowerSeries f = PowerSeries::from("x", [](unsigned n) { return Rat(n + 1); }, 5);
  PowerSeries g = theta_apply(op, f);
  for (unsigned n = 0; n <= 5; ++n) CHECK(g.coeffs[n] == Rat(n * (n + 1)));
  CHECK_THROWS_AS(theta_apply(op, PowerSeries::from("y", A, 3)), std::invalid_argument);
  CHECK(theta_plus(Rat(1)).eval(Rat(2)) == 3);
}

TEST_CASE("Apery operator") {
  ThetaOperator op = apery_operator();
  CHECK(op.order() == 3);
  auto r = annihilation_check(op, PowerSeries::from(op.var(), A, 50));
  CHECK(r.pass);
  Singularities s = operator_singularities(op);
  CHECK(s.symbol == UPoly(std::vector<Rat>{1, -34, 1}));
  CHECK(has_root(s, {17, 12, 2}));
  CHECK(has_root(s, {17, -12, 2}));
  Recurrence rec = operator_to_recurrence(op);
  auto pre = recurrence_prefix(rec, 1, 6);
  for (unsigned n = 0; n < 6; ++n) CHECK(pre[n] == A(n));
}

TEST_CASE("Fermi operator: printed form fails, doubled middle term is the pullback") {
  PowerSeries f = PowerSeries::from("xi", A, 40, 2);
  auto printed = annihilation_check(fermi_operator(false), f);
  CHECK(!printed.pass);
  REQUIRE(printed.first_failure.has_value());
  CHECK(*printed.first_failure == 2);
  CHECK(printed.value == 20);
  CHECK(annihilation_check(fermi_operator(true), f).pass);
  CHECK(annihilation_check(apery_operator(), PowerSeries::from("lambda", A, 40)).pass);
  std::vector<Rat> seq;
  for (unsigned n = 0; n < 12; ++n) seq.push_back(n % 2 ? Rat(0) : A(n / 2));
  CHECK(fit_term_factor(fermi_operator(false), 2, seq) == 2);
  Singularities s = operator_singularities(fermi_operator(true));
  for (int a : {3, -3})
    for (int b : {2, -2}) CHECK(has_root(s, {a, b, 2}));
  CHECK(!has_root(s, {3, 1, 2}));
}

TEST_CASE("Domb operator: printed form predicts 825/8, factor 36 fixes it") {
  ThetaOperator printed = domb_operator(false);
  auto pre = recurrence_prefix(operator_to_recurrence(printed), 1, 3);
  CHECK(pre[1] == 6);
  CHECK(pre[2] == Rat(825, 8));
  CHECK(!annihilation_check(printed, PowerSeries::from("mu", B, 50)).pass);
  Singularities sp = operator_singularities(printed);
  CHECK(sp.symbol == UPoly(std::vector<Rat>{1, -40, 4}));
  std::vector<Rat> seq;
  for (unsigned n = 0; n < 6; ++n) seq.push_back(B(n));
  CHECK(fit_term_factor(printed, 2, seq) == 36);
  ThetaOperator fixed = domb_operator(true);
  CHECK(annihilation_check(fixed, PowerSeries::from("mu", B, 50)).pass);
  Singularities s = operator_singularities(fixed);
  CHECK(has_root(s, {Rat(1, 4), 0, 1}));
  CHECK(has_root(s, {Rat(1, 36), 0, 1}));
  CHECK(s.roots.size() == 2);
}

TEST_CASE("factorization over Z") {
  BigInt content;
  // 2 (x - 1)^2 (x^2 + 1)
  UPoly p = UPoly(std::vector<Rat>{-1, 1}) * UPoly(std::vector<Rat>{-1, 1}) * UPoly(std::vector<Rat>{1, 0, 1}) * Rat(2);
  auto f = factor_over_z(p, content);
  CHECK(content == 2);
  UPoly back = UPoly(Rat(content));
  for (const auto& [q, e] : f)
    for (unsigned i = 0; i < e; ++i) back = back * q;
  CHECK(back == p);
  CHECK(f.size() == 2);
  // x^4 + 4 = (x^2 - 2x + 2)(x^2 + 2x + 2) has no rational roots.
  auto g = factor_over_z(UPoly(std::vector<Rat>{4, 0, 0, 0, 1}), content);
  CHECK(g.size() == 2);
}
