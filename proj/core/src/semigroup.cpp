#include "toric/semigroup.hpp"

#include <algorithm>
#include <set>

namespace toric {

AffineSemigroup AffineSemigroup::from_generators(std::size_t rank, std::vector<IntVec> gens) {
  std::vector<IntVec> cleaned;
  for (IntVec& g : gens) {
    if (g.dim() != rank)
      domain_error("DimensionMismatch", "AffineSemigroup", "generator dimension mismatch");
    if (!g.is_zero()) cleaned.push_back(std::move(g));
  }
  std::sort(cleaned.begin(), cleaned.end());
  cleaned.erase(std::unique(cleaned.begin(), cleaned.end()), cleaned.end());
  return AffineSemigroup{rank, std::move(cleaned)};
}

SemigroupOracle::SemigroupOracle(std::size_t rank, std::vector<IntVec> generators)
    : rank_(rank) {
  AffineSemigroup s = AffineSemigroup::from_generators(rank, std::move(generators));
  gens_ = std::move(s.generators);
  Cone hull = Cone::from_rays(rank_, gens_);
  facets_ = hull.hrep().ineq;
  span_eq_ = hull.hrep().eq;
  ell_ = IntVec(rank_);
  for (const IntVec& f : facets_) ell_ = ell_ + f;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (dot(ell_, gens_[i]) > 0)
      positive_.push_back(i);
    else
      unit_.push_back(i);
  }
  std::stable_sort(positive_.begin(), positive_.end(), [&](std::size_t a, std::size_t b) {
    return dot(ell_, gens_[a]) > dot(ell_, gens_[b]);
  });
  std::vector<IntVec> unit_gens;
  for (std::size_t i : unit_) unit_gens.push_back(gens_[i]);
  unit_mat_ = IntMat::from_cols(unit_gens, rank_);
}

bool SemigroupOracle::search(IntVec remaining, std::size_t from,
                             std::vector<std::pair<std::size_t, Int>>& stack) const {
  if (from == positive_.size()) {
    if (remaining.is_zero()) return true;
    if (unit_.empty()) return false;
    // The generators with ell = 0 span a linear space, so the semigroup they
    // generate equals the lattice they generate: an integral solve decides
    // membership, and what remains is producing nonnegative multiplicities.
    std::optional<IntVec> sol = solve_integral(unit_mat_, remaining);
    if (!sol) return false;
    std::vector<Int> mult(unit_.size());
    for (std::size_t j = 0; j < unit_.size(); ++j) mult[j] = (*sol)[j];
    bool nonneg = true;
    for (std::size_t j = 0; j < unit_.size(); ++j) {
      if (mult[j] >= 0) continue;
      IntVec neg = -gens_[unit_[j]];
      bool fixed = false;
      for (std::size_t k = 0; k < unit_.size(); ++k) {
        if (gens_[unit_[k]] == neg) {
          mult[k] += -mult[j];
          mult[j] = 0;
          fixed = true;
          break;
        }
      }
      if (!fixed) nonneg = false;
    }
    if (!nonneg) {
      // no opposite partner: search a nonnegative representation directly,
      // by increasing total degree
      const std::size_t un = unit_.size();
      for (Int cap = 1; cap <= 24; ++cap) {
        std::vector<Int> trial(un, 0);
        auto rec = [&](auto&& self, std::size_t j, IntVec rem, Int budget) -> bool {
          if (rem.is_zero()) {
            mult = trial;
            return true;
          }
          if (j == un) return false;
          for (Int c = 0; c <= budget; ++c) {
            trial[j] = c;
            if (self(self, j + 1, rem - gens_[unit_[j]] * c, budget - c)) return true;
          }
          trial[j] = 0;
          return false;
        };
        if (rec(rec, 0, remaining, cap)) {
          nonneg = true;
          break;
        }
      }
      if (!nonneg)
        domain_error("Unbounded", "member",
                     "certificate search over the lineality generators exceeded its bound; "
                     "pre-restrict the input");
    }
    for (std::size_t j = 0; j < unit_.size(); ++j)
      if (mult[j] != 0) stack.emplace_back(unit_[j], mult[j]);
    return true;
  }

  // prune: the remainder must stay in the generator cone
  for (const IntVec& f : facets_)
    if (dot(f, remaining) < 0) return false;
  for (const IntVec& e : span_eq_)
    if (dot(e, remaining) != 0) return false;

  const std::size_t gi = positive_[from];
  const Int lg = dot(ell_, gens_[gi]);
  Int cap = dot(ell_, remaining) / lg;
  for (Int c = cap; c >= 0; --c) {
    IntVec next = remaining - gens_[gi] * c;
    if (c != 0) stack.emplace_back(gi, c);
    if (search(std::move(next), from + 1, stack)) return true;
    if (c != 0) stack.pop_back();
  }
  return false;
}

MembershipCertificate SemigroupOracle::member(const IntVec& m) const {
  if (m.dim() != rank_)
    domain_error("DimensionMismatch", "member", "query dimension does not match semigroup rank");
  MembershipCertificate cert;
  for (const IntVec& e : span_eq_) {
    Int p = dot(e, m);
    if (p != 0) {
      cert.separating_functional = p < 0 ? e : IntVec(-e);
      return cert;
    }
  }
  for (const IntVec& f : facets_) {
    if (dot(f, m) < 0) {
      cert.separating_functional = f;
      return cert;
    }
  }
  std::vector<std::pair<std::size_t, Int>> stack;
  if (search(m, 0, stack)) {
    cert.present = true;
    std::sort(stack.begin(), stack.end());
    cert.coefficients = std::move(stack);
  }
  return cert;
}

MembershipCertificate member(const AffineSemigroup& s, const IntVec& m) {
  SemigroupOracle oracle(s.rank, s.generators);
  return oracle.member(m);
}

namespace {

// Lattice points of the half-open parallelepiped of a full-dimensional
// simplicial cone, via the Smith normal form of its generator matrix.
std::vector<IntVec> parallelepiped_points(const std::vector<IntVec>& gens, std::size_t dim) {
  IntMat g = IntMat::from_cols(gens, dim);
  SnfDecomposition snf = smith_normal_form(g);
  // U G V = D, so Z^d / G Z^d is enumerated by residues of D through U^{-1}.
  // Rows of U are a basis transform; x = U^{-1} w runs over class reps.
  // Instead of inverting U we enumerate w and solve U x = w (U unimodular).
  std::vector<Int> d(dim);
  for (std::size_t i = 0; i < dim; ++i) d[i] = snf.d.at(i, i);
  std::vector<IntVec> points;
  std::vector<Int> w(dim);
  // iterate over the product of Z_{d_i}
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == dim) {
      IntVec wv(dim);
      for (std::size_t t = 0; t < dim; ++t) wv[t] = w[t];
      std::optional<IntVec> x = solve_integral(snf.u, wv);
      // U is unimodular so the solve always succeeds
      IntVec y = *x;
      // reduce into the fundamental parallelepiped: y -= G * floor(G^{-1} y)
      std::vector<Rat> rhs(dim);
      for (std::size_t t = 0; t < dim; ++t) rhs[t] = Rat(y[t]);
      std::optional<std::vector<Rat>> lam = solve_rational(g, rhs);
      IntVec p = y;
      for (std::size_t t = 0; t < dim; ++t) {
        Int fl = floor_div(boost::multiprecision::numerator((*lam)[t]),
                           boost::multiprecision::denominator((*lam)[t]));
        if (fl != 0) p = p - gens[t] * fl;
      }
      points.push_back(p);
      return;
    }
    for (Int c = 0; c < d[i]; ++c) {
      w[i] = c;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

std::vector<IntVec> to_span_coords(const std::vector<IntVec>& vecs,
                                   const std::vector<IntVec>& basis, std::size_t ambient) {
  IntMat b = IntMat::from_cols(basis, ambient);
  std::vector<IntVec> out;
  for (const IntVec& v : vecs) {
    std::optional<IntVec> c = solve_integral(b, v);
    if (!c)
      domain_error("DimensionMismatch", "cone_lattice_generators",
                   "vector outside the saturated span lattice");
    out.push_back(*c);
  }
  return out;
}

IntVec from_span_coords(const IntVec& c, const std::vector<IntVec>& basis, std::size_t ambient) {
  IntVec v(ambient);
  for (std::size_t i = 0; i < basis.size(); ++i) v = v + basis[i] * c[i];
  return v;
}

// Remove every element that is a sum of two nonzero semigroup elements.
std::vector<IntVec> reduce_to_minimal(std::size_t rank, std::vector<IntVec> candidates) {
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  SemigroupOracle oracle(rank, candidates);
  const std::vector<IntVec>& gens = oracle.generators();
  IntVec ell(rank);
  {
    Cone hull = Cone::from_rays(rank, gens);
    for (const IntVec& f : hull.hrep().ineq) ell = ell + f;
  }
  std::vector<IntVec> minimal;
  for (const IntVec& h : candidates) {
    bool redundant = false;
    for (const IntVec& g : gens) {
      if (g == h) continue;
      if (dot(ell, g) > dot(ell, h)) continue;
      IntVec rest = h - g;
      if (rest.is_zero()) continue;
      if (oracle.member(rest).present) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(h);
  }
  return minimal;
}

}  // namespace

std::vector<IntVec> cone_lattice_generators(const Cone& d) {
  if (d.rays().empty()) return {};
  const std::size_t ambient = d.rank();
  std::vector<IntVec> basis = saturated_span_basis(d.rays(), ambient);
  const std::size_t dim = basis.size();
  std::vector<IntVec> gens = to_span_coords(d.rays(), basis, ambient);

  std::vector<std::vector<std::size_t>> tri = placing_triangulation(gens, dim);
  std::set<IntVec> collected(gens.begin(), gens.end());
  for (const auto& simplex : tri) {
    std::vector<IntVec> sg;
    for (std::size_t i : simplex) sg.push_back(gens[i]);
    for (IntVec& p : parallelepiped_points(sg, dim))
      if (!p.is_zero()) collected.insert(std::move(p));
  }
  std::vector<IntVec> cands(collected.begin(), collected.end());

  bool pointed = is_strongly_convex(d);
  std::vector<IntVec> out = pointed ? reduce_to_minimal(dim, std::move(cands)) : std::move(cands);
  std::vector<IntVec> lifted;
  for (const IntVec& c : out) lifted.push_back(from_span_coords(c, basis, ambient));
  std::sort(lifted.begin(), lifted.end());
  return lifted;
}

AffineSemigroup hilbert_basis(const Cone& c) {
  if (c.rank() > 6)
    domain_error("RankTooLarge", "hilbert_basis", "rank is limited to 6");
  if (!is_strongly_convex(c))
    domain_error("NotStronglyConvex", "hilbert_basis", "cone must be strongly convex");
  Cone d = dual_cone(c);
  std::vector<IntVec> gens = cone_lattice_generators(d);
  return AffineSemigroup::from_generators(c.rank(), std::move(gens));
}

AffineSemigroup semigroup_sum(const AffineSemigroup& a, const AffineSemigroup& b) {
  if (a.rank != b.rank)
    domain_error("RankMismatch", "semigroup_sum", "semigroups live in different ranks");
  std::vector<IntVec> gens = a.generators;
  gens.insert(gens.end(), b.generators.begin(), b.generators.end());
  return AffineSemigroup::from_generators(a.rank, std::move(gens));
}

SaturationResult is_saturated(const AffineSemigroup& s) {
  if (s.rank > 6) domain_error("RankTooLarge", "is_saturated", "rank is limited to 6");
  Cone hull = Cone::from_rays(s.rank, s.generators);
  std::vector<IntVec> saturation = cone_lattice_generators(hull);
  SemigroupOracle oracle(s.rank, s.generators);
  for (const IntVec& h : saturation) {
    if (!oracle.member(h).present) return SaturationResult{false, h};
  }
  return SaturationResult{true, std::nullopt};
}

SumEqualityResult check_semigroup_sum_equality(const Cone& sigma, const Cone& sigma_p) {
  if (sigma.rank() != sigma_p.rank())
    domain_error("RankMismatch", "check_semigroup_sum_equality", "ambient ranks differ");
  if (!is_strongly_convex(sigma) || !is_strongly_convex(sigma_p))
    domain_error("NotStronglyConvex", "check_semigroup_sum_equality",
                 "both cones must be strongly convex");
  AffineSemigroup sum =
      semigroup_sum(hilbert_basis(sigma), hilbert_basis(sigma_p));
  Cone meet = intersect(sigma, sigma_p);
  std::vector<IntVec> target = cone_lattice_generators(dual_cone(meet));
  SemigroupOracle oracle(sum.rank, sum.generators);
  for (const IntVec& h : target) {
    if (!oracle.member(h).present) return SumEqualityResult{false, h};
  }
  return SumEqualityResult{true, std::nullopt};
}

IntVec find_interior_shift(const Cone& sigma, const IntVec& m1, const IntVec& m2) {
  if (!is_strongly_convex(sigma))
    domain_error("NotStronglyConvex", "find_interior_shift", "cone must be strongly convex");
  Cone d = dual_cone(sigma);
  IntVec mp(sigma.rank());
  for (const IntVec& r : d.rays()) mp = mp + r;  // interior point of the dual
  Int ell = 0;
  for (const IntVec& u : sigma.rays()) {
    Int pu = dot(mp, u);
    for (const IntVec* m : {&m1, &m2}) {
      Int pm = dot(*m, u);
      if (pm >= 0) continue;
      if (pu <= 0)
        domain_error("NotStronglyConvex", "find_interior_shift",
                     "dual interior point pairs nonpositively with a ray");
      Int need = ceil_div(-pm, pu);
      if (need > ell) ell = need;
    }
  }
  return mp * ell;
}

}  // namespace toric
