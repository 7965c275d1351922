#include "toric/criteria.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace toric {

std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::Yes:
      return "yes";
    case Verdict::No:
      return "no";
    default:
      return "undetermined";
  }
}

NormalityResult check_graph_closure_normal(const WallRelation& w, bool all_pairs) {
  FlipFans fans = flip_fans(w);  // validates flip preconditions
  (void)fans;
  NormalityResult out;
  out.note = "semigroup sum equality over wall-crossing cone pairs";
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j : w.j_plus)
    for (std::size_t i : w.j_minus) pairs.emplace_back(j, i);
  if (all_pairs) {
    for (std::size_t a = 0; a < w.j_plus.size(); ++a)
      for (std::size_t b = a + 1; b < w.j_plus.size(); ++b)
        pairs.emplace_back(w.j_plus[a], w.j_plus[b]);
    for (std::size_t a = 0; a < w.j_minus.size(); ++a)
      for (std::size_t b = a + 1; b < w.j_minus.size(); ++b)
        pairs.emplace_back(w.j_minus[a], w.j_minus[b]);
    out.note += " (all pairs)";
  }
  for (auto [j, i] : pairs) {
    SumEqualityResult eq = check_semigroup_sum_equality(w.sigma_without(j), w.sigma_without(i));
    ++out.pairs_checked;
    if (!eq.equal) {
      out.verdict = Verdict::No;
      out.witness = eq.witness;
      return out;
    }
  }
  out.verdict = Verdict::Yes;
  return out;
}

namespace {

struct ReducedParams {
  Int g, b1p, b2p, b3;
};

ReducedParams reduced_params(const Int& b1, const Int& b2, const Int& b3, const char* where) {
  if (!(b1 < 0 && b2 < 0 && b3 > 0))
    domain_error("PreconditionFailed", where, "need b1 < 0, b2 < 0, b3 > 0");
  Int g = boost::multiprecision::gcd(-b1, -b2);
  return {g, (-b1) / g, (-b2) / g, b3};
}

}  // namespace

ReducedResult reduced_criterion_3d(const Int& b1, const Int& b2, const Int& b3) {
  ReducedParams p = reduced_params(b1, b2, b3, "reduced_criterion_3d");
  ReducedResult out;
  out.note = "remainder criterion on the distinguished affine chart";
  for (Int lambda = 0; lambda <= p.b1p * p.b2p; ++lambda) {
    Int glam_mod = floor_mod(p.g * lambda, p.b3);
    bool ok = false;
    Int ymax = lambda / p.b1p;
    for (Int y = 0; y <= ymax; ++y) {
      if (glam_mod >= p.g * floor_mod(lambda - p.b1p * y, p.b2p)) {
        ok = true;
        break;
      }
    }
    if (!ok) {
      out.verdict = Verdict::No;
      out.failing_lambda = lambda;
      return out;
    }
  }
  out.verdict = Verdict::Yes;
  return out;
}

Verdict reduced_oracle_3d(const Int& b1, const Int& b2, const Int& b3, long bound) {
  ReducedParams pr = reduced_params(b1, b2, b3, "reduced_oracle_3d");
  if (bound < 0 || Int(bound) > 100000 || -b1 > 100000 || -b2 > 100000 || b3 > 100000)
    domain_error("PreconditionFailed", "reduced_oracle_3d",
                 "oracle coefficients and bound are limited to 1e5");
  // the scan is dense; everything fits comfortably in machine integers
  const long g = static_cast<long>(pr.g);
  const long b1p = static_cast<long>(pr.b1p);
  const long b2p = static_cast<long>(pr.b2p);
  const long bb3 = static_cast<long>(pr.b3);
  for (long p1 = 0; p1 <= bound; ++p1) {
    for (long p3 = 0; p3 <= bound; ++p3) {
      // admissibility: g*b2p*p2 >= g*b1p*p1 + b3*p3
      long num = g * b1p * p1 + bb3 * p3;
      long p2_min = (num + g * b2p - 1) / (g * b2p);
      for (long p2 = p2_min; p2 <= bound; ++p2) {
        long k = g * b2p * p2 - g * b1p * p1 - bb3 * p3;  // = b1p1 - b2p2 - b3p3 >= 0
        // search q1 in [p1, b2p*p2/b1p] with the minimal q2 choice
        long q1_hi = (b2p * p2) / b1p;
        bool ok = false;
        for (long q1 = p1; q1 <= q1_hi; ++q1) {
          long q2 = (b1p * q1 + b2p - 1) / b2p;  // ceil, minimizes -b2q2 + b1q1
          if (q2 > p2) continue;
          if (k >= g * (b2p * q2 - b1p * q1)) {
            ok = true;
            break;
          }
        }
        if (!ok) return Verdict::No;
      }
    }
  }
  return Verdict::Yes;
}

FlopReducedResult flop_reduced_criterion(const Int& b1, const Int& b2) {
  if (!(b1 < 0 && b2 < 0))
    domain_error("PreconditionFailed", "flop_reduced_criterion", "need b1 < 0 and b2 < 0");
  Int b3 = -b1 - b2 - 1;
  if (b3 <= 0)
    domain_error("PreconditionFailed", "flop_reduced_criterion", "b3 = -b1-b2-1 must be positive");
  ReducedParams p = reduced_params(b1, b2, b3, "flop_reduced_criterion");
  FlopReducedResult out;
  for (Int y1 = 0; y1 * p.b1p <= p.b3; ++y1) {
    Int rest = p.b3 - y1 * p.b1p;
    if (rest % p.b2p == 0) {
      out.verdict = Verdict::Yes;
      out.certificate = std::make_pair(y1, rest / p.b2p);
      return out;
    }
  }
  out.verdict = Verdict::No;
  return out;
}

SmoothReducedResult smooth_reduced_criterion(const WallRelation& w) {
  for (std::size_t j : w.j_plus) {
    if (!is_smooth(w.sigma_without(j)))
      domain_error("NotSmooth", "smooth_reduced_criterion",
                   "every maximal cone on the plus side must be smooth");
  }
  for (std::size_t j : w.j_plus) {
    if (w.b[j] != 1)
      domain_error("InternalInvariantViolation", "smooth_reduced_criterion",
                   "smooth plus side forces b_j = 1");
  }
  SmoothReducedResult out;
  for (std::size_t a = 0; a < w.j_minus.size(); ++a) {
    for (std::size_t b = a + 1; b < w.j_minus.size(); ++b) {
      Int x = -w.b[w.j_minus[a]];
      Int y = -w.b[w.j_minus[b]];
      if (x % y != 0 && y % x != 0) {
        out.verdict = Verdict::No;
        out.offending = std::make_pair(x, y);
        return out;
      }
    }
  }
  out.verdict = Verdict::Yes;
  return out;
}

Verdict spade_oracle(const WallRelation& w, long bound) {
  for (std::size_t j : w.j_plus) {
    if (!is_smooth(w.sigma_without(j)))
      domain_error("NotSmooth", "spade_oracle", "plus side must be smooth");
  }
  if (w.j_minus.size() < 2)
    domain_error("PreconditionFailed", "spade_oracle", "|J_-| must be at least 2");

  // Work in the coordinates z_1..z_n of the dual basis attached to the last
  // plus-side cone; everything is determined by the coefficient vector b.
  // The representability condition is checked once for every choice of the
  // distinguished negative index.
  const std::size_t n = w.n;
  std::vector<long> b(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (boost::multiprecision::abs(w.b[i]) > 100000 || bound < 0 || bound > 100000)
      domain_error("PreconditionFailed", "spade_oracle",
                   "oracle coefficients and bound are limited to 1e5");
    b[i] = static_cast<long>(w.b[i]);
  }

  auto check_for_distinguished = [&](std::size_t i0) -> bool {
    std::vector<std::size_t> support;  // z' coordinates free besides i0
    for (std::size_t i = 0; i < n; ++i) {
      if (i == i0) continue;
      if (w.b[i] <= 0)
        support.push_back(i);  // J_- and J_0
      else if (w.j_plus.size() == 2)
        support.push_back(i);  // with |J_+| = 2 the extra plus index stays free
    }

    std::vector<long> z(n, 0);
    auto certificate = [&]() -> bool {
      // enumerate z'_i in [0, z_i] on the support, solve for z'_{i0}
      auto rec = [&](auto&& self, std::size_t t, long partial) -> bool {
        if (t == support.size()) {
          if (partial % (-b[i0]) != 0) return false;
          long zi0p = partial / (-b[i0]);
          return zi0p <= 0 && z[i0] >= zi0p;
        }
        std::size_t i = support[t];
        for (long v = 0; v <= z[i]; ++v) {
          if (self(self, t + 1, partial + b[i] * v)) return true;
        }
        return false;
      };
      return rec(rec, 0, 0);
    };

    // region: z_{i0} in [-bound, 0], other z_i in [0, bound], sum b_i z_i <= 0
    auto scan = [&](auto&& self, std::size_t i) -> bool {
      if (i == n) {
        long s = 0;
        for (std::size_t t = 0; t < n; ++t) s += b[t] * z[t];
        if (s > 0) return true;  // outside the region
        return certificate();
      }
      long lo = (i == i0) ? -bound : 0;
      long hi = (i == i0) ? 0 : bound;
      for (long v = lo; v <= hi; ++v) {
        z[i] = v;
        if (!self(self, i + 1)) return false;
      }
      return true;
    };
    return scan(scan, 0);
  };

  for (std::size_t i0 : w.j_minus) {
    if (i0 >= n) continue;  // the last index is never negative
    if (!check_for_distinguished(i0)) return Verdict::No;
  }
  return Verdict::Yes;
}

namespace {

IntVec eval_block(const std::vector<IntVec>& gens, const std::vector<Int>& mult,
                  std::size_t rank) {
  IntVec v(rank);
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (mult[i] != 0) v = v + gens[i] * mult[i];
  return v;
}

Int total_degree(const std::vector<Int>& m) {
  Int s = 0;
  for (const Int& x : m) s += x;
  return s;
}

// All multiplicity vectors over `gens` of total degree <= cap evaluating to
// `target`, found by depth-first search with a positive-functional prune
// when the generator cone is pointed.
void bounded_representations(const std::vector<IntVec>& gens, const IntVec& target, const Int& cap,
                             std::vector<std::vector<Int>>& out) {
  const std::size_t rank = target.dim();
  Cone hull = Cone::from_rays(rank, gens);
  const std::vector<IntVec>& facets = hull.hrep().ineq;
  const std::vector<IntVec>& eqs = hull.hrep().eq;
  std::vector<Int> mult(gens.size(), 0);
  auto rec = [&](auto&& self, std::size_t i, IntVec rem, Int budget) -> void {
    for (const IntVec& e : eqs)
      if (dot(e, rem) != 0) return;
    if (i == gens.size()) {
      if (rem.is_zero()) out.push_back(mult);
      return;
    }
    for (const IntVec& f : facets)
      if (dot(f, rem) < 0) return;
    for (Int c = 0; c <= budget; ++c) {
      mult[i] = c;
      self(self, i + 1, rem - gens[i] * c, budget - c);
    }
    mult[i] = 0;
  };
  rec(rec, 0, target, cap);
}

}  // namespace

bool binomial_connectivity_oracle(const std::vector<IntVec>& gens_a0,
                                  const std::vector<IntVec>& gens_a,
                                  const std::vector<IntVec>& gens_ap,
                                  const ExponentTriple& start, const ExponentTriple& end,
                                  long degree_bound) {
  if (gens_a0.empty() && gens_a.empty() && gens_ap.empty())
    domain_error("PreconditionFailed", "binomial_connectivity_oracle", "no generators");
  const std::size_t rank =
      !gens_a0.empty() ? gens_a0[0].dim() : (!gens_a.empty() ? gens_a[0].dim() : gens_ap[0].dim());

  auto total_point = [&](const ExponentTriple& t) {
    IntVec v = eval_block(gens_a0, t.a0, rank);
    v = v + eval_block(gens_a, t.a, rank);
    v = v + eval_block(gens_ap, t.ap, rank);
    return v;
  };
  IntVec m_start = total_point(start);
  if (!(m_start == total_point(end)))
    domain_error("LatticePointMismatch", "binomial_connectivity_oracle",
                 "start and end evaluate to different lattice points");

  using State = std::vector<Int>;  // concatenated (a0 | a | ap)
  auto pack = [&](const ExponentTriple& t) {
    State s;
    s.insert(s.end(), t.a0.begin(), t.a0.end());
    s.insert(s.end(), t.a.begin(), t.a.end());
    s.insert(s.end(), t.ap.begin(), t.ap.end());
    return s;
  };
  const std::size_t n0 = gens_a0.size(), na = gens_a.size();
  State s0 = pack(start), s1 = pack(end);
  if (s0 == s1) return true;
  Int cap = degree_bound;

  std::vector<IntVec> gens_0p = gens_a0;  // block (A0 | A'\A0)
  gens_0p.insert(gens_0p.end(), gens_ap.begin(), gens_ap.end());
  std::vector<IntVec> gens_0a = gens_a0;  // block (A0 | A\A0)
  gens_0a.insert(gens_0a.end(), gens_a.begin(), gens_a.end());

  std::set<State> visited;
  std::deque<State> queue;
  visited.insert(s0);
  queue.push_back(s0);
  while (!queue.empty()) {
    State cur = queue.front();
    queue.pop_front();
    std::vector<Int> a0(cur.begin(), cur.begin() + n0);
    std::vector<Int> a(cur.begin() + n0, cur.begin() + n0 + na);
    std::vector<Int> ap(cur.begin() + n0 + na, cur.end());

    // move type 1: fix the A-part, re-express the (A0, A') part
    {
      IntVec point = eval_block(gens_a0, a0, rank) + eval_block(gens_ap, ap, rank);
      Int budget = cap - total_degree(a);
      if (budget >= 0) {
        std::vector<std::vector<Int>> reps;
        bounded_representations(gens_0p, point, budget, reps);
        for (const auto& rep : reps) {
          State next;
          next.insert(next.end(), rep.begin(), rep.begin() + n0);
          next.insert(next.end(), a.begin(), a.end());
          next.insert(next.end(), rep.begin() + n0, rep.end());
          if (next == s1) return true;
          if (visited.insert(next).second) queue.push_back(next);
        }
      }
    }
    // move type 2: fix the A'-part, re-express the (A0, A) part
    {
      IntVec point = eval_block(gens_a0, a0, rank) + eval_block(gens_a, a, rank);
      Int budget = cap - total_degree(ap);
      if (budget >= 0) {
        std::vector<std::vector<Int>> reps;
        bounded_representations(gens_0a, point, budget, reps);
        for (const auto& rep : reps) {
          State next;
          next.insert(next.end(), rep.begin(), rep.begin() + n0);
          next.insert(next.end(), rep.begin() + n0, rep.end());
          next.insert(next.end(), ap.begin(), ap.end());
          if (next == s1) return true;
          if (visited.insert(next).second) queue.push_back(next);
        }
      }
    }
  }
  return false;
}

bool binomial_connectivity_oracle(const std::vector<IntVec>& gens_a0,
                                  const std::vector<IntVec>& gens_a,
                                  const std::vector<IntVec>& gens_ap,
                                  const ExponentTriple& start, const ExponentTriple& end) {
  auto degree = [](const ExponentTriple& t) {
    Int s = total_degree(t.a0) + total_degree(t.a) + total_degree(t.ap);
    return static_cast<long>(s);
  };
  long bound = 3 * std::max(degree(start), degree(end));
  return binomial_connectivity_oracle(gens_a0, gens_a, gens_ap, start, end, bound);
}

ReducedResult wall_reduced_criterion(const WallRelation& w) {
  if (w.n == 3 && w.j_minus.size() == 2 && w.j_plus.size() == 2) {
    // reorder rays so a smooth plus-side cone plays the distinguished last
    // role: (minus, minus, other plus, smooth plus)
    std::optional<std::size_t> smooth_j;
    for (auto it = w.j_plus.rbegin(); it != w.j_plus.rend(); ++it) {
      if (is_smooth(w.sigma_without(*it))) {
        smooth_j = *it;
        break;
      }
    }
    if (smooth_j) {
      std::size_t other_plus = w.j_plus[0] == *smooth_j ? w.j_plus[1] : w.j_plus[0];
      std::vector<IntVec> rays = {w.rays[w.j_minus[0]], w.rays[w.j_minus[1]],
                                  w.rays[other_plus], w.rays[*smooth_j]};
      WallRelation wr = WallRelation::from_rays(3, rays);
      if (wr.b[3] != 1 || wr.b[0] >= 0 || wr.b[1] >= 0 || wr.b[2] <= 0)
        domain_error("InternalInvariantViolation", "wall_reduced_criterion",
                     "distinguished reordering lost the sign pattern");
      return reduced_criterion_3d(wr.b[0], wr.b[1], wr.b[2]);
    }
  }
  bool plus_smooth = true;
  for (std::size_t j : w.j_plus)
    if (!is_smooth(w.sigma_without(j))) {
      plus_smooth = false;
      break;
    }
  if (plus_smooth) {
    SmoothReducedResult sr = smooth_reduced_criterion(w);
    ReducedResult out;
    out.verdict = sr.verdict;
    out.note = "divisibility criterion on the negative coefficients";
    return out;
  }
  ReducedResult out;
  out.verdict = Verdict::Undetermined;
  out.note = "no applicable criterion: ambient rank > 3 and the plus side is not smooth";
  return out;
}

DiagnosisReport diagnose(const WallRelation& w, bool all_pairs) {
  DiagnosisReport report;
  report.wall = w;
  report.irreducible = Verdict::Yes;
  report.notes.push_back("irreducible: fiber products of flip data are irreducible");

  report.graph_closure_normal = check_graph_closure_normal(w, all_pairs);
  report.notes.push_back("normality: " + report.graph_closure_normal.note);

  report.fiber_product_reduced = wall_reduced_criterion(w);
  report.notes.push_back("reducedness: " + report.fiber_product_reduced.note);

  Verdict normal = report.graph_closure_normal.verdict;
  Verdict reduced = report.fiber_product_reduced.verdict;
  if (normal == Verdict::No || reduced == Verdict::No)
    report.x_equals_x_tilde = Verdict::No;
  else if (normal == Verdict::Yes && reduced == Verdict::Yes)
    report.x_equals_x_tilde = Verdict::Yes;
  else
    report.x_equals_x_tilde = Verdict::Undetermined;
  return report;
}

}  // namespace toric
