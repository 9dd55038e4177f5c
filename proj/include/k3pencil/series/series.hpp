#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "k3pencil/exactmath/upoly.hpp"

namespace k3pencil {

/// Binomial sums. a_n uses upper index n in both binomials.
BigInt apery(unsigned n);
BigInt sum_a(unsigned n);
BigInt domb(unsigned n);

/**
 * sum_a x^a p_a(theta), theta = x d/dx. The theta-polynomials are UPoly
 * in the variable theta.
 */
class ThetaOperator {
 public:
  ThetaOperator() = default;
  explicit ThetaOperator(std::string var) : var_(std::move(var)) {}

  /// Adds x^a * p(theta).
  ThetaOperator& add(int a, const UPoly& p);
  const std::string& var() const { return var_; }
  const std::map<int, UPoly>& terms() const { return terms_; }
  /// theta-polynomial of the x^a term (zero if absent).
  UPoly term(int a) const;
  /// Same operator with the x^a term multiplied by c.
  ThetaOperator scaled_term(int a, const Rat& c) const;
  /// Highest theta degree.
  int order() const;
  std::string to_string() const;

 private:
  std::string var_ = "x";
  std::map<int, UPoly> terms_;
};

/// theta + c as a UPoly in theta.
UPoly theta_plus(const Rat& c, const Rat& scale = 1);

ThetaOperator apery_operator();
/// Printed: theta^3 - xi^2 (theta+1)(17theta^2+34theta+20) + xi^4 (theta+2)^3.
/// corrected doubles the middle term (pullback of the Apery operator by lambda = xi^2).
ThetaOperator fermi_operator(bool corrected);
/// Printed: theta^3 - 2mu(2theta+1)(10theta^2+10theta+3) + mu^2(2theta+1)(theta+1)(2theta+3).
/// corrected multiplies the mu^2 term by 36.
ThetaOperator domb_operator(bool corrected);

/// Truncated power series sum_{n<=N} c_n x^n.
struct PowerSeries {
  std::string var = "x";
  std::vector<Rat> coeffs;
  std::size_t order() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  /// Coefficients from seq(n) for n = 0..N, placed at x^(stride*n).
  static PowerSeries from(const std::string& var, const std::function<Rat(unsigned)>& seq, std::size_t N,
                          unsigned stride = 1);
};

/// Throws std::invalid_argument on a variable mismatch.
PowerSeries theta_apply(const ThetaOperator& op, const PowerSeries& f);

/// sum_a c_a(n) u_{n-a} = 0 with c_a(n) = p_a(n - a).
struct Recurrence {
  std::map<int, UPoly> c;
  Rat residual(const std::function<Rat(long)>& u, long n) const;
  /// u_n from earlier values (c_0(n) must be nonzero).
  Rat solve(const std::function<Rat(long)>& u, long n) const;
  std::string to_string() const;
};
Recurrence operator_to_recurrence(const ThetaOperator& op);

/// First n >= first where the coefficient is nonzero.
struct AnnihilationResult {
  bool pass = false;
  std::optional<std::size_t> first_failure;
  Rat value;  ///< coefficient at the first failure
};
AnnihilationResult annihilation_check(const ThetaOperator& op, const PowerSeries& f);

/// Sequence values predicted by the recurrence from u_0 (u_n = 0 for n < 0).
std::vector<Rat> recurrence_prefix(const Recurrence& r, const Rat& u0, std::size_t count);

/**
 * Factor c of the x^a term making the recurrence reproduce `seq` at the
 * first index where that term contributes. Throws if the term never
 * contributes in range.
 */
Rat fit_term_factor(const ThetaOperator& op, int a, const std::vector<Rat>& seq);

/// a + b*sqrt(d), d squarefree (d = 1 means rational, b = 0).
struct QuadraticSurd {
  Rat a, b;
  BigInt d = 1;
  std::string to_string() const;
  friend bool operator==(const QuadraticSurd&, const QuadraticSurd&) = default;
};

struct Singularities {
  /// Leading theta-coefficient symbol sum_a lc(p_a) x^a (p_a of top degree).
  UPoly symbol;
  BigInt content;
  /// Primitive irreducible factors over Z, positive leading coefficient.
  std::vector<std::pair<UPoly, unsigned>> factors;
  /// Roots of factors of degree <= 2; higher-degree factors are listed only.
  std::vector<QuadraticSurd> roots;
  std::string factored(std::string_view var) const;
};
Singularities operator_singularities(const ThetaOperator& op);

/// Factorization of an integer polynomial into primitive irreducibles (Kronecker).
std::vector<std::pair<UPoly, unsigned>> factor_over_z(const UPoly& p, BigInt& content);

}  // namespace k3pencil
