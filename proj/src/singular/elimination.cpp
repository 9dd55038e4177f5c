#include "k3pencil/singular/elimination.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace k3pencil {

namespace {

struct Projection {
  FPoly eliminant;
  /// Elements of Q(s) whose vanishing would add solutions.
  std::vector<RatFunc> s_conditions;
};

RatFunc to_base(const FieldElem& c) { return c.b().is_zero() ? c.a() : c.norm(); }

std::vector<std::string> without(const std::vector<std::string>& vars, std::size_t v) {
  std::vector<std::string> out = vars;
  out.erase(out.begin() + static_cast<long>(v));
  return out;
}

MPoly random_combination(const std::vector<MPoly>& ps, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(1, 9);
  MPoly r(ps.front().vars());
  for (const auto& p : ps) r += p * FieldElem(dist(rng) * (dist(rng) % 2 ? 1 : -1));
  return r;
}

Projection project_once(std::vector<MPoly> cur, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Projection out;
  auto note_constant = [&](const MPoly& p) {
    if (p.is_zero() || !p.is_constant()) return false;
    FieldElem c = p.constant_value();
    if (!c.is_rational()) out.s_conditions.push_back(to_base(c));
    return true;
  };
  cur.erase(std::remove_if(cur.begin(), cur.end(), [](const MPoly& p) { return p.is_zero(); }), cur.end());
  if (cur.empty()) return out;
  while (cur.front().nvars() > 1) {
    for (const auto& p : cur)
      if (note_constant(p)) {
        out.eliminant = FPoly(FieldElem(1));
        return out;
      }
    std::size_t v = cur.front().nvars() - 1;
    const std::string vname = cur.front().vars()[v];
    std::vector<MPoly> with, next;
    for (auto& p : cur) (p.degree_in(v) > 0 ? with : next).push_back(p);
    if (with.size() >= 2) {
      std::vector<MPoly> combos;
      const std::size_t ncombo = with.size() == 2 ? 2 : 3;
      int attempts = 0;
      while (combos.size() < ncombo) {
        MPoly c = random_combination(with, rng);
        if (c.degree_in(v) > 0) combos.push_back(std::move(c));
        if (++attempts > 100) throw std::runtime_error("could not form a nondegenerate combination");
      }
      std::vector<std::pair<int, int>> pairs = {{0, 1}};
      if (ncombo == 3) pairs = {{0, 1}, {0, 2}, {1, 2}};
      for (auto [i, j] : pairs) {
        MPoly r = cur.front().nvars() == 2 ? resultant_by_interpolation(combos[i], combos[j], vname)
                                           : resultant(combos[i], combos[j], vname);
        if (!r.is_zero()) next.push_back(std::move(r));
      }
    }
    // A lone equation in v only constrains v; dropping it gives a superset.
    auto vars = without(cur.front().vars(), v);
    cur.clear();
    for (auto& p : next) {
      MPoly q = p.in_ring(vars);
      if (!q.is_zero()) cur.push_back(std::move(q));
    }
    if (cur.empty()) return out;
  }
  std::vector<FPoly> uni;
  for (const auto& p : cur) uni.push_back(to_fpoly(p, 0));
  FPoly g;
  for (const auto& u : uni) g = gcd(g, u);
  if (g.is_constant()) {
    for (const auto& u : uni)
      if (u.is_constant()) note_constant(from_fpoly(u, cur.front().vars(), 0));
    // Two nonconstant eliminants share a root exactly where their resultant vanishes.
    std::vector<const FPoly*> nonconst;
    for (const auto& u : uni)
      if (u.degree() > 0) nonconst.push_back(&u);
    if (nonconst.size() >= 2) {
      FieldElem r = resultant(*nonconst[0], *nonconst[1]);
      if (!r.is_rational()) out.s_conditions.push_back(to_base(r));
    }
  }
  out.eliminant = g;
  return out;
}

FPoly candidate_product(const std::vector<FieldElem>& values) {
  FPoly p(FieldElem(1));
  for (const auto& v : values) p = p * FPoly::linear(v);
  return p;
}

void add_s_conditions(std::vector<std::string>& out, const std::vector<RatFunc>& conds) {
  for (const auto& c : conds) {
    for (const UPoly* part : {&c.num(), &c.den()}) {
      if (part->degree() <= 0) continue;
      std::string s = part->monic().to_string();
      if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    }
  }
}

}  // namespace

FPoly project_to_first(const std::vector<MPoly>& eqs, std::uint64_t seed) {
  Projection a = project_once(eqs, seed);
  Projection b = project_once(eqs, seed * 7919 + 17);
  if (a.eliminant.is_zero()) return b.eliminant;
  if (b.eliminant.is_zero()) return a.eliminant;
  return gcd(a.eliminant, b.eliminant);
}

ZeroSetCertificate certify_zero_set(const std::vector<MPoly>& eqs0,
                                    const std::vector<std::vector<FieldElem>>& candidates) {
  ZeroSetCertificate cert;
  std::vector<MPoly> eqs;
  for (const auto& e : eqs0)
    if (!e.is_zero()) eqs.push_back(e);
  if (eqs.empty()) {
    if (!eqs0.empty() && eqs0.front().nvars() == 0 && !candidates.empty()) {
      cert.ok = true;
      return cert;
    }
    cert.witness = "system is identically zero";
    return cert;
  }
  const auto& vars = eqs.front().vars();
  for (const auto& e : eqs) {
    if (e.is_constant()) {
      FieldElem c = e.constant_value();
      if (!c.is_rational()) add_s_conditions(cert.degenerate_s, {to_base(c)});
      cert.ok = true;
      return cert;
    }
  }
  if (vars.empty()) {
    cert.ok = true;
    return cert;
  }

  Projection a = project_once(eqs, 1);
  Projection b = project_once(eqs, 7937);
  FPoly E = a.eliminant.is_zero() ? b.eliminant
            : b.eliminant.is_zero() ? a.eliminant
                                    : gcd(a.eliminant, b.eliminant);
  add_s_conditions(cert.degenerate_s, a.s_conditions);
  add_s_conditions(cert.degenerate_s, b.s_conditions);
  if (E.is_zero()) {
    cert.witness = "projection to " + vars[0] + " is not finite";
    return cert;
  }

  std::vector<FieldElem> values;
  for (const auto& c : candidates)
    if (std::none_of(values.begin(), values.end(), [&](const FieldElem& v) { return v == c[0]; }))
      values.push_back(c[0]);

  if (E.degree() > 0) {
    FPoly sf = squarefree_part(E);
    FPoly g = gcd(sf, candidate_product(values));
    if (!(g == sf)) {
      cert.witness = "eliminant factor without a candidate lift: " + sf.divide_exact(g).to_string(vars[0]);
      return cert;
    }
  } else {
    values.clear();
  }

  for (const auto& v : values) {
    std::vector<std::optional<FieldElem>> fix(vars.size());
    fix[0] = v;
    std::vector<MPoly> sub;
    for (const auto& e : eqs) sub.push_back(e.restrict(fix));
    std::vector<std::vector<FieldElem>> subcand;
    for (const auto& c : candidates)
      if (c[0] == v) subcand.emplace_back(c.begin() + 1, c.end());
    if (vars.size() == 1) {
      // All equations vanish at this root of the eliminant only if it is a candidate.
      continue;
    }
    ZeroSetCertificate rec = certify_zero_set(sub, subcand);
    for (auto& d : rec.degenerate_s)
      if (std::find(cert.degenerate_s.begin(), cert.degenerate_s.end(), d) == cert.degenerate_s.end())
        cert.degenerate_s.push_back(d);
    if (!rec.ok) {
      cert.witness = vars[0] + "=" + v.to_string() + ": " + rec.witness;
      return cert;
    }
  }
  cert.ok = true;
  return cert;
}

}  // namespace k3pencil
