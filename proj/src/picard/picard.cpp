// SPDX-License-Identifier: MIT
#include "k3pencil/picard/picard.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "k3pencil/exactmath/parse.hpp"

namespace k3pencil {

namespace {

std::vector<SingularEntry> base_points() {
  return {{ProjPoint::of({1, 0, 0}), 5}, {ProjPoint::of({0, 1, 0}), 5}, {ProjPoint::of({1, 1, 2}), 3},
          {ProjPoint::of({-1, 1, 0}), 1}};
}

std::vector<ProjPoint> points_of(const std::vector<SingularEntry>& table) {
  std::vector<ProjPoint> out;
  for (const auto& e : table) out.push_back(e.point);
  return out;
}

/// A_k type of the plane curve F at P, classified in the chart of P's last nonzero coordinate.
int classify_plane_point(const MPoly& F, const ProjPoint& P) {
  ProjPoint p = P.normalized();
  std::size_t chart = 0;
  for (std::size_t i = p.dim(); i-- > 0;)
    if (!p.coords[i].is_zero()) {
      chart = i;
      break;
    }
  std::vector<std::optional<FieldElem>> fix(3);
  fix[chart] = FieldElem(1);
  std::vector<FieldElem> affine;
  for (std::size_t i = 0; i < 3; ++i)
    if (i != chart) affine.push_back(p.coords[i]);
  return milnor_ade_classify(F.restrict(fix), affine).k;
}

std::string e_label(std::size_t point, int j) {
  return "E" + std::to_string(point + 1) + "," + std::to_string(j);
}

}  // namespace

FiberData fiber_data(const std::string& id) {
  FiberData f;
  f.id = id;
  f.singular = base_points();
  if (id == "generic") {
    f.config = BranchConfig::generic();
  } else if (id == "s1") {
    f.config = BranchConfig::at(Rat(1));
    for (auto p : {ProjPoint::of({1, 0, 1}), ProjPoint::of({0, 1, 1}), ProjPoint::of({1, 1, 1})})
      f.singular.push_back({p, 1});
  } else if (id == "s-1") {
    f.config = BranchConfig::at(Rat(-1));
    f.singular.push_back({ProjPoint::of({0, 0, 1}), 1});
  } else {
    throw std::invalid_argument("unknown fiber '" + id + "' (expected generic, s1 or s-1)");
  }
  f.lines = lifted_lines(f.config);
  return f;
}

SingularTableCheck check_singular_table(const FiberData& fiber) {
  SingularTableCheck out;
  std::ostringstream why;
  const auto pts = points_of(fiber.singular);
  bool ok = true;
  if (!fiber.config.s_value) {
    IntersectionCertificate cert = certify_intersections(fiber.config.G0, fiber.config.G1, pts);
    if (!cert.complete) {
      ok = false;
      why << "branch intersections incomplete: " << cert.witness << "; ";
    }
    for (std::size_t i = 0; i < pts.size() && i < cert.multiplicities.size(); ++i)
      if (branch_ade_type(cert.multiplicities[i]) != fiber.singular[i].k) {
        ok = false;
        why << pts[i].to_string() << " has contact " << cert.multiplicities[i] << "; ";
      }
  } else {
    LocusReport rep = verify_singular_locus(fiber.config.sextic, pts);
    if (!rep.complete) {
      ok = false;
      why << "singular locus incomplete: " << rep.witness << "; ";
    }
  }
  for (const auto& e : fiber.singular) {
    int k = classify_plane_point(fiber.config.sextic, e.point);
    out.computed_k.push_back(k);
    if (k != e.k) {
      ok = false;
      why << e.point.to_string() << " is A_" << k << " not A_" << e.k << "; ";
    }
  }
  out.pass = ok;
  out.details = why.str();
  return out;
}

std::size_t DivisorConfig::index_of(const std::string& label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw std::out_of_range("no divisor labelled " + label);
  return static_cast<std::size_t>(it - labels.begin());
}

IntMatrix DivisorConfig::complete(const std::vector<int>& bits) const {
  if (bits.size() != slots.size()) throw std::invalid_argument("wrong number of slot choices");
  IntMatrix g = fixed;
  for (std::size_t k = 0; k < slots.size(); ++k) {
    std::size_t e = bits[k] ? slots[k].minus : slots[k].plus;
    g(slots[k].line, e) = g(e, slots[k].line) = 1;
  }
  return g;
}

DivisorConfig build_divisor_config(const FiberData& fiber, bool verify) {
  if (verify) {
    SingularTableCheck chk = check_singular_table(fiber);
    if (!chk.pass) throw std::runtime_error("singular table mismatch for " + fiber.id + ": " + chk.details);
  }
  DivisorConfig cfg;
  cfg.fiber = fiber.id;
  cfg.labels.push_back("H");
  for (std::size_t p = 0; p < fiber.singular.size(); ++p) {
    const int k = fiber.singular[p].k;
    if (k % 2 == 0) throw std::runtime_error("A_k with even k is not a branch point of this model");
    const int n = (k + 1) / 2;
    cfg.chains.emplace_back(cfg.labels.size(), static_cast<std::size_t>(k));
    for (int j = -(n - 1); j <= n - 1; ++j) cfg.labels.push_back(e_label(p, j));
  }
  const std::size_t first_line = cfg.labels.size();
  for (const auto& l : fiber.lines) cfg.labels.push_back(l.label);
  const std::size_t N = cfg.labels.size();
  IntMatrix& G = cfg.fixed;
  G = IntMatrix(N, N);
  G(0, 0) = 2;
  for (const auto& [start, len] : cfg.chains)
    for (std::size_t i = 0; i < len; ++i) {
      G(start + i, start + i) = -2;
      if (i + 1 < len) G(start + i, start + i + 1) = G(start + i + 1, start + i) = 1;
    }
  auto lm = lifted_line_matrix(fiber.lines, fiber.config, points_of(fiber.singular));
  for (std::size_t i = 0; i < fiber.lines.size(); ++i) {
    G(0, first_line + i) = G(first_line + i, 0) = 1;
    for (std::size_t j = 0; j < fiber.lines.size(); ++j) G(first_line + i, first_line + j) = lm[i][j];
  }
  for (std::size_t p = 0; p < fiber.singular.size(); ++p) {
    const int n = (fiber.singular[p].k + 1) / 2;
    bool normalized = false;
    for (std::size_t i = 0; i < fiber.lines.size(); ++i) {
      const int c = line_contact(fiber.lines[i].line, fiber.config.sextic, fiber.singular[p].point);
      if (c == 0) continue;
      const std::size_t row = first_line + i;
      if (c >= 2 * n) {
        std::size_t e = cfg.index_of(e_label(p, 0));
        G(row, e) = G(e, row) = 1;
        continue;
      }
      if (c % 2) throw std::runtime_error("odd contact of " + fiber.lines[i].label + " at " +
                                          fiber.singular[p].point.to_string());
      const int level = n - c / 2;
      std::size_t plus = cfg.index_of(e_label(p, level)), minus = cfg.index_of(e_label(p, -level));
      if (!normalized) {
        G(row, plus) = G(plus, row) = 1;
        normalized = true;
      } else {
        cfg.slots.push_back({row, plus, minus, p});
      }
    }
  }
  return cfg;
}

DivisorConfig build_divisor_config(const std::string& fiber, bool verify) {
  return build_divisor_config(fiber_data(fiber), verify);
}

FiberResult enumerate_and_filter(const DivisorConfig& config, std::size_t rank_bound, unsigned jobs) {
  const std::size_t m = config.slots.size();
  if (m > 24) throw std::invalid_argument("too many ambiguous slots to enumerate");
  FiberResult res;
  res.fiber = config.fiber;
  res.assignments = std::size_t{1} << m;
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, res.assignments));

  std::vector<std::optional<Survivor>> found(res.assignments);
  auto work = [&](unsigned t) {
    for (std::size_t mask = t; mask < res.assignments; mask += jobs) {
      std::vector<int> bits(m);
      for (std::size_t k = 0; k < m; ++k) bits[k] = static_cast<int>((mask >> (m - 1 - k)) & 1);
      IntMatrix g = config.complete(bits);
      std::size_t r = rank(g);
      if (r <= rank_bound) found[mask] = Survivor{bits, std::move(g), r};
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(work, t);
  work(0);
  for (auto& th : pool) th.join();

  for (auto& s : found)
    if (s) res.survivors.push_back(std::move(*s));
  for (std::size_t i = 0; i < res.survivors.size(); ++i) {
    LatticeInvariants inv = lattice_invariants(GramLattice(res.survivors[i].gram, config.labels));
    if (i == 0) {
      res.invariants = inv;
    } else if (!fingerprints_match(inv, res.invariants)) {
      throw std::runtime_error("survivors disagree: " + res.invariants.summary() + " vs " + inv.summary());
    }
  }
  return res;
}

std::string picard_model(const std::string& fiber) {
  if (fiber == "generic") return "U + E8(-1)^2 + <-12>";
  if (fiber == "s1") return "U + E8(-1)^2 + <-4> + <-2>";
  if (fiber == "s-1") return "U + E8(-1)^2 + <-12> + <-2>";
  throw std::invalid_argument("no model lattice for fiber " + fiber);
}

std::string transcendental_model(const std::string& fiber) {
  if (fiber == "generic") return "U + <12>";
  if (fiber == "s1") return "<2> + <4>";
  if (fiber == "s-1") return "<2> + <12>";
  throw std::invalid_argument("no model lattice for fiber " + fiber);
}

LatticeInvariants transcendental_invariants(const FiberResult& result) { return complement_in_k3(result.invariants); }

IntMatrix chain_flip(const DivisorConfig& config, const IntMatrix& gram, std::size_t point) {
  const auto [start, len] = config.chains.at(point);
  std::vector<std::size_t> perm(gram.rows());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  for (std::size_t i = 0; i < len; ++i) perm[start + i] = start + len - 1 - i;
  IntMatrix out(gram.rows(), gram.cols());
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = 0; j < perm.size(); ++j) out(i, j) = gram(perm[i], perm[j]);
  return out;
}

ReflectionCheck reflection_isomorphism_check(const Rat& s_from, const Rat& s_to) {
  ReflectionCheck out;
  out.s_from = s_from;
  out.s_to = s_to;
  const auto& V = plane_vars();
  const std::array<Rat, 3> l = {Rat(1), Rat(1), Rat(-1)};
  auto lin = [&](const std::vector<FieldElem>& p) {
    Rat v = 0;
    for (std::size_t i = 0; i < 3; ++i) v += l[i] * p[i].rational_value();
    return v;
  };
  // Singular points at s_to: the four base points plus the fiber's extras.
  std::vector<ProjPoint> targets = points_of(base_points());
  if (s_to == 1)
    for (const auto& e : fiber_data("s1").singular) targets.push_back(e.point);
  if (s_to == -1)
    for (const auto& e : fiber_data("s-1").singular) targets.push_back(e.point);

  const MPoly A[2] = {branch_cubic(0, s_from), branch_cubic(1, s_from)};
  const MPoly B[2] = {branch_cubic(0, s_to), branch_cubic(1, s_to)};
  const std::vector<FieldElem> P = {FieldElem(1), FieldElem(0), FieldElem(0)};  // off the axis
  const Rat lP = lin(P);
  for (const auto& Q : targets) {
    const Rat lQ = lin(Q.coords);
    if (lQ == 0) continue;
    // M = I + c l^T with l.c = -2 (an involution) and M P proportional to Q.
    const Rat kappa = -lP / lQ;
    std::array<Rat, 3> c;
    for (std::size_t i = 0; i < 3; ++i) c[i] = (kappa * Q.coords[i].rational_value() - P[i].rational_value()) / lP;
    std::vector<MPoly> img;
    for (std::size_t i = 0; i < 3; ++i) {
      MPoly row = MPoly::variable(V, V[i]);
      for (std::size_t j = 0; j < 3; ++j) row += MPoly::variable(V, V[j]) * FieldElem(c[i] * l[j]);
      img.push_back(row);
    }
    std::vector<int> target;
    std::vector<Rat> factors;
    for (int i = 0; i < 2; ++i) {
      MPoly h = A[i].compose(img);
      for (int j = 0; j < 2; ++j) {
        FieldElem f = h.lead_coeff() / B[j].lead_coeff();
        if (h.lead_monomial() == B[j].lead_monomial() && f.is_rational() && h == B[j] * f) {
          target.push_back(j);
          factors.push_back(f.rational_value());
          break;
        }
      }
    }
    if (target.size() != 2 || target[0] == target[1]) continue;
    // Clear denominators for an integral representative.
    BigInt den = 1;
    for (const auto& ci : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), ci.get_den_mpz_t());
    out.matrix = IntMatrix(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        Rat e = (i == j ? Rat(1) : Rat(0)) + c[i] * l[j];
        e *= den;
        e.canonicalize();
        out.matrix(i, j) = e.get_num();
      }
    out.target = target;
    out.factors = factors;
    out.pass = true;
    return out;
  }
  out.details = "no harmonic homology with axis x+y-z carries the branch cubics at s=" + to_string(s_from) +
                " to those at s=" + to_string(s_to);
  return out;
}

}  // namespace k3pencil
