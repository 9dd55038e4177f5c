// Copyright (c) k3pencil contributors. Licensed under the Apache License, Version 2.0.
#include "k3pencil/lattice/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace k3pencil {

namespace {

Rat reduce_mod(const Rat& x, long m) {
  Rat q = x / m;
  BigInt f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  Rat r = x - Rat(f * m);
  r.canonicalize();
  return r;
}

std::string replace_all(std::string s, std::string_view from, std::string_view to) {
  std::size_t pos = 0;
  while ((pos = s.find(from, pos)) != std::string::npos) {
    s.replace(pos, from.size(), to);
    pos += to.size();
  }
  return s;
}

/// Cartan matrix of a simply laced root system (positive definite).
IntMatrix cartan(char type, int n) {
  std::vector<std::pair<int, int>> edges;
  if (type == 'A') {
    if (n < 1) throw std::invalid_argument("A_n needs n >= 1");
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  } else if (type == 'D') {
    if (n < 4) throw std::invalid_argument("D_n needs n >= 4");
    for (int i = 0; i + 2 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(n - 3, n - 1);
  } else if (type == 'E') {
    if (n < 6 || n > 8) throw std::invalid_argument("E_n needs 6 <= n <= 8");
    // Node 1 (index 1) hangs off node 3 (index 3); the rest is a chain 0-2-3-...
    edges.emplace_back(0, 2);
    edges.emplace_back(1, 3);
    for (int i = 2; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  } else {
    throw std::invalid_argument(std::string("unknown root system ") + type);
  }
  IntMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) m(i, i) = 2;
  for (auto [a, b] : edges) m(a, b) = m(b, a) = -1;
  return m;
}

IntMatrix block_sum(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

IntMatrix scaled(IntMatrix m, long k) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) *= k;
  return m;
}

long parse_int(const std::string& s, std::size_t& pos) {
  std::size_t start = pos;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
    throw std::invalid_argument("lattice spec: expected integer at '" + s.substr(start) + "'");
  return std::stol(s.substr(start, pos - start));
}

IntMatrix parse_summand(const std::string& s) {
  std::size_t pos = 0;
  IntMatrix block;
  std::vector<std::string> names;
  if (s.empty()) throw std::invalid_argument("lattice spec: empty summand");
  if (s[0] == '<') {
    ++pos;
    long n = parse_int(s, pos);
    if (pos >= s.size() || s[pos] != '>') throw std::invalid_argument("lattice spec: missing '>' in " + s);
    ++pos;
    block = IntMatrix{{n}};
  } else if (s[0] == 'U') {
    ++pos;
    block = IntMatrix{{0, 1}, {1, 0}};
  } else if (s[0] == 'A' || s[0] == 'D' || s[0] == 'E') {
    char t = s[0];
    ++pos;
    if (pos < s.size() && s[pos] == '_') ++pos;
    long n = parse_int(s, pos);
    block = cartan(t, static_cast<int>(n));
  } else {
    throw std::invalid_argument("lattice spec: unknown summand '" + s + "'");
  }
  if (pos < s.size() && s[pos] == '(') {
    ++pos;
    long k = parse_int(s, pos);
    if (pos >= s.size() || s[pos] != ')') throw std::invalid_argument("lattice spec: missing ')' in " + s);
    ++pos;
    block = scaled(block, k);
  }
  long reps = 1;
  if (pos < s.size() && s[pos] == '^') {
    ++pos;
    reps = parse_int(s, pos);
    if (reps < 1) throw std::invalid_argument("lattice spec: bad exponent in " + s);
  }
  if (pos != s.size()) throw std::invalid_argument("lattice spec: trailing text in '" + s + "'");
  IntMatrix out = block;
  for (long r = 1; r < reps; ++r) out = block_sum(out, block);
  return out;
}

BigInt element_order(const std::vector<long>& k, const std::vector<BigInt>& orders) {
  BigInt o = 1;
  for (std::size_t i = 0; i < k.size(); ++i) {
    BigInt g;
    BigInt ki = k[i];
    mpz_gcd(g.get_mpz_t(), ki.get_mpz_t(), orders[i].get_mpz_t());
    BigInt part = orders[i] / g;
    mpz_lcm(o.get_mpz_t(), o.get_mpz_t(), part.get_mpz_t());
  }
  return o;
}

std::vector<std::vector<long>> all_elements(const std::vector<BigInt>& orders) {
  std::vector<std::vector<long>> out(1, std::vector<long>());
  for (const auto& o : orders) {
    std::vector<std::vector<long>> next;
    for (const auto& e : out)
      for (long k = 0; k < o.get_si(); ++k) {
        auto f = e;
        f.push_back(k);
        next.push_back(std::move(f));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

GramLattice::GramLattice(IntMatrix g, std::vector<std::string> names) : labels(std::move(names)), gram(std::move(g)) {
  if (!gram.is_symmetric()) throw std::invalid_argument("Gram matrix is not symmetric");
  if (labels.empty())
    for (std::size_t i = 0; i < gram.rows(); ++i) labels.push_back("e" + std::to_string(i + 1));
  if (labels.size() != gram.rows()) throw std::invalid_argument("label count does not match Gram size");
}

bool GramLattice::is_even() const {
  for (std::size_t i = 0; i < dim(); ++i)
    if (gram(i, i) % 2 != 0) return false;
  return true;
}

std::size_t DiscriminantForm::group_order() const {
  BigInt n = 1;
  for (const auto& o : orders) n *= o;
  return n.get_ui();
}

Rat DiscriminantForm::q_of(const std::vector<long>& k) const {
  Rat v = 0;
  for (std::size_t i = 0; i < k.size(); ++i) {
    v += Rat(k[i] * k[i]) * q[i];
    for (std::size_t j = i + 1; j < k.size(); ++j) v += Rat(2 * k[i] * k[j]) * b[i][j];
  }
  return reduce_mod(v, 2);
}

Rat DiscriminantForm::b_of(const std::vector<long>& k, const std::vector<long>& l) const {
  Rat v = 0;
  for (std::size_t i = 0; i < k.size(); ++i)
    for (std::size_t j = 0; j < l.size(); ++j) v += Rat(k[i] * l[j]) * b[i][j];
  return reduce_mod(v, 1);
}

DiscriminantForm DiscriminantForm::negated() const {
  DiscriminantForm n = *this;
  for (auto& v : n.q) v = reduce_mod(-v, 2);
  for (auto& row : n.b)
    for (auto& v : row) v = reduce_mod(-v, 1);
  return n;
}

std::string LatticeInvariants::summary() const {
  std::ostringstream os;
  os << "rank " << signature.rank << ", signature (" << signature.n_plus << "," << signature.n_minus << "), group ";
  if (form.orders.empty()) os << "trivial";
  for (std::size_t i = 0; i < form.orders.size(); ++i) os << (i ? " x " : "") << "Z/" << form.orders[i].get_str();
  if (!form.q.empty()) {
    os << ", q = [";
    for (std::size_t i = 0; i < form.q.size(); ++i) os << (i ? ", " : "") << to_string(form.q[i]);
    os << "]";
  }
  return os.str();
}

GramLattice standard_lattice(std::string_view spec) {
  std::string s(spec);
  s = replace_all(s, "⊕", "+");  // ⊕
  s = replace_all(s, "⟨", "<");  // ⟨
  s = replace_all(s, "⟩", ">");  // ⟩
  s = replace_all(s, "−", "-");  // −
  s = replace_all(s, "²", "^2");
  s = replace_all(s, "³", "^3");
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (s.empty()) throw std::invalid_argument("lattice spec: empty");
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '<' || c == '(') ++depth;
    if (c == '>' || c == ')') --depth;
    if (c == '+' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  IntMatrix g;
  for (const auto& p : parts) g = g.rows() ? block_sum(g, parse_summand(p)) : parse_summand(p);
  return GramLattice(g);
}

Signature rank_signature(const GramLattice& L) {
  const std::size_t n = L.dim();
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = L.gram(i, j);
  auto swap_both = [&](std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    for (auto& row : a) std::swap(row[i], row[j]);
  };
  auto add_both = [&](std::size_t i, std::size_t j, const Rat& f) {  // e_i += f e_j
    for (std::size_t c = 0; c < n; ++c) a[i][c] += f * a[j][c];
    for (std::size_t r = 0; r < n; ++r) a[r][i] += f * a[r][j];
  };
  Signature sig;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][p] == 0) ++p;
    if (p == n) {
      // Zero diagonal: a nonzero off-diagonal entry yields a nonzero diagonal one.
      bool found = false;
      for (std::size_t i = k; i < n && !found; ++i)
        for (std::size_t j = i + 1; j < n && !found; ++j)
          if (a[i][j] != 0) {
            add_both(i, j, 1);
            p = i;
            found = true;
          }
      if (!found) break;
    }
    swap_both(k, p);
    for (std::size_t i = k + 1; i < n; ++i)
      if (a[i][k] != 0) add_both(i, k, -a[i][k] / a[k][k]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i][i] > 0)
      ++sig.n_plus;
    else if (a[i][i] < 0)
      ++sig.n_minus;
    else
      ++sig.n_zero;
  }
  sig.rank = sig.n_plus + sig.n_minus;
  return sig;
}

GramLattice radical_quotient(const GramLattice& L) {
  ColumnReduction cr = column_reduce(L.gram);
  if (cr.nonzero == L.dim()) return L;
  IntMatrix B = cr.V.columns(0, cr.nonzero);
  IntMatrix g = B.transpose() * L.gram * B;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < cr.nonzero; ++i) names.push_back("b" + std::to_string(i + 1));
  return GramLattice(g, names);
}

LatticeInvariants discriminant_group_form(const GramLattice& L) {
  LatticeInvariants inv;
  inv.signature = rank_signature(L);
  if (inv.signature.n_zero != 0) throw std::domain_error("call radical_quotient first");
  inv.abs_det = abs(determinant(L.gram));
  const std::size_t n = L.dim();
  if (n == 0) return inv;
  SmithForm snf = smith_normal_form(L.gram);
  auto Ginv = rational_inverse(L.gram);
  std::vector<std::vector<BigInt>> gens;
  for (std::size_t i = 0; i < n; ++i) {
    if (snf.diagonal[i] <= 1) continue;
    inv.form.orders.push_back(snf.diagonal[i]);
    std::vector<BigInt> c(n);
    for (std::size_t r = 0; r < n; ++r) c[r] = snf.U_inverse(r, i);
    gens.push_back(std::move(c));
  }
  auto pair = [&](const std::vector<BigInt>& x, const std::vector<BigInt>& y) {
    Rat v = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (y[j] != 0) v += Rat(x[i] * y[j]) * Ginv[i][j];
    }
    return v;
  };
  const std::size_t m = gens.size();
  inv.form.b.assign(m, std::vector<Rat>(m));
  for (std::size_t i = 0; i < m; ++i) {
    inv.form.q.push_back(reduce_mod(pair(gens[i], gens[i]), 2));
    for (std::size_t j = 0; j < m; ++j) inv.form.b[i][j] = reduce_mod(pair(gens[i], gens[j]), 1);
  }
  return inv;
}

LatticeInvariants lattice_invariants(const GramLattice& L) { return discriminant_group_form(radical_quotient(L)); }

bool forms_isomorphic(const DiscriminantForm& A, const DiscriminantForm& B) {
  if (A.orders != B.orders) return false;
  if (A.orders.empty()) return true;
  const auto elems = all_elements(B.orders);
  const std::size_t m = A.orders.size();
  // Candidate images of each generator: same order and same q.
  std::vector<std::vector<const std::vector<long>*>> cand(m);
  for (std::size_t i = 0; i < m; ++i)
    for (const auto& e : elems)
      if (element_order(e, B.orders) == A.orders[i] && B.q_of(e) == A.q[i]) cand[i].push_back(&e);
  std::vector<const std::vector<long>*> image(m);
  const auto a_elems = all_elements(A.orders);
  std::function<bool(std::size_t)> search = [&](std::size_t i) -> bool {
    if (i == m) {
      std::set<std::vector<long>> seen;
      for (const auto& k : a_elems) {
        std::vector<long> v(B.orders.size(), 0);
        for (std::size_t g = 0; g < m; ++g)
          for (std::size_t c = 0; c < v.size(); ++c) v[c] += k[g] * (*image[g])[c];
        for (std::size_t c = 0; c < v.size(); ++c) v[c] = ((v[c] % B.orders[c].get_si()) + B.orders[c].get_si()) % B.orders[c].get_si();
        seen.insert(v);
      }
      return seen.size() == a_elems.size();
    }
    for (const auto* e : cand[i]) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) ok = B.b_of(*image[j], *e) == A.b[j][i];
      if (!ok) continue;
      image[i] = e;
      if (search(i + 1)) return true;
    }
    return false;
  };
  return search(0);
}

bool fingerprints_match(const LatticeInvariants& a, const LatticeInvariants& b) {
  return a.signature == b.signature && a.abs_det == b.abs_det && forms_isomorphic(a.form, b.form);
}

bool invariants_match(const GramLattice& A, const GramLattice& B) {
  return fingerprints_match(lattice_invariants(A), lattice_invariants(B));
}

LatticeInvariants complement_in_k3(const LatticeInvariants& picard) {
  if (picard.signature.n_plus > 3 || picard.signature.n_minus > 19)
    throw std::domain_error("lattice does not embed in the K3 lattice");
  LatticeInvariants t;
  t.signature.n_plus = 3 - picard.signature.n_plus;
  t.signature.n_minus = 19 - picard.signature.n_minus;
  t.signature.rank = t.signature.n_plus + t.signature.n_minus;
  t.form = picard.form.negated();
  t.abs_det = picard.abs_det;
  return t;
}

GramLattice conjugate(const GramLattice& L, const IntMatrix& U) {
  return GramLattice(U.transpose() * L.gram * U, L.labels);
}

}  // namespace k3pencil
