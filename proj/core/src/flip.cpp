#include "toric/flip.hpp"

#include <algorithm>
#include <set>

namespace toric {

WallRelation WallRelation::from_rays(std::size_t rank, std::vector<IntVec> rays) {
  if (rays.size() != rank + 1)
    domain_error("NotAdjacent", "WallRelation", "expected rank+1 rays");
  for (IntVec& u : rays) {
    if (u.dim() != rank)
      domain_error("DimensionMismatch", "WallRelation", "ray dimension mismatch");
    if (u.is_zero()) domain_error("ZeroVector", "WallRelation", "zero ray");
    u = primitive(u);
  }
  IntMat m = IntMat::from_cols(rays, rank);
  std::vector<IntVec> kernel = kernel_basis(m);
  if (kernel.size() != 1)
    domain_error("NotAdjacent", "WallRelation",
                 "rays do not span the ambient rank (relation space is not one-dimensional)");
  IntVec b = kernel.front();
  if (b[rank] == 0)
    domain_error("NotAdjacent", "WallRelation", "last ray does not occur in the relation");
  if (b[rank] < 0) b = -b;

  WallRelation w;
  w.n = rank;
  w.rays = std::move(rays);
  w.b = std::move(b);
  for (std::size_t i = 0; i <= rank; ++i) {
    if (w.b[i] < 0)
      w.j_minus.push_back(i);
    else if (w.b[i] == 0)
      w.j_zero.push_back(i);
    else
      w.j_plus.push_back(i);
  }
  if (w.j_minus.empty())
    domain_error("NotAdjacent", "WallRelation", "relation has no negative part");
  return w;
}

Cone WallRelation::sigma0() const { return Cone::from_rays(n, rays); }

Cone WallRelation::sigma_without(std::size_t j) const {
  std::vector<IntVec> gens;
  for (std::size_t i = 0; i < rays.size(); ++i)
    if (i != j) gens.push_back(rays[i]);
  return Cone::from_rays(n, gens);
}

IntVec WallRelation::exchanged_ray() const {
  IntVec u(n);
  for (std::size_t i : j_minus) u = u - rays[i] * b[i];
  return primitive(u);
}

WallRelation wall_relation(const Cone& sigma_a, const Cone& sigma_b) {
  if (sigma_a.rank() != sigma_b.rank())
    domain_error("RankMismatch", "wall_relation", "cones live in different ambient ranks");
  const std::size_t n = sigma_a.rank();
  if (!is_simplicial(sigma_a) || sigma_a.ray_count() != n || !is_simplicial(sigma_b) ||
      sigma_b.ray_count() != n)
    domain_error("NotSimplicial", "wall_relation",
                 "both cones must be simplicial of full rank");

  std::set<IntVec> a_rays(sigma_a.rays().begin(), sigma_a.rays().end());
  std::set<IntVec> b_rays(sigma_b.rays().begin(), sigma_b.rays().end());
  std::vector<IntVec> wall, opposite;
  for (const IntVec& r : a_rays)
    (b_rays.count(r) ? wall : opposite).push_back(r);
  for (const IntVec& r : b_rays)
    if (!a_rays.count(r)) opposite.push_back(r);
  if (wall.size() != n - 1 || opposite.size() != 2)
    domain_error("NotAdjacent", "wall_relation", "cones do not share a common wall");

  std::sort(wall.begin(), wall.end());
  std::sort(opposite.begin(), opposite.end());
  std::vector<IntVec> ordered = wall;
  ordered.push_back(opposite[0]);
  ordered.push_back(opposite[1]);
  WallRelation w = WallRelation::from_rays(n, ordered);
  if (w.b[n - 1] <= 0)
    domain_error("NotAdjacent", "wall_relation",
                 "opposite rays lie on the same side of the wall");
  return w;
}

FlipFans flip_fans(const WallRelation& w) {
  if (w.j_minus.size() < 2)
    domain_error("NotAFlippingWall", "flip_fans",
                 "the negative part must have at least two indices");
  Cone sigma0 = w.sigma0();
  if (!is_strongly_convex(sigma0))
    domain_error("NotStronglyConvex", "flip_fans", "sigma0 contains a line");

  std::vector<Cone> plus_side, minus_side;
  for (std::size_t j : w.j_plus) plus_side.push_back(w.sigma_without(j));
  for (std::size_t i : w.j_minus) minus_side.push_back(w.sigma_without(i));
  FlipFans out;
  out.sigma_fan = make_fan(w.n, plus_side);
  out.sigma_prime_fan = make_fan(w.n, minus_side);
  out.sigma0 = std::move(sigma0);
  return out;
}

bool is_flop(const WallRelation& w) {
  IntMat m = IntMat::from_rows(w.rays, w.n);
  std::vector<Rat> ones(w.rays.size(), Rat(1));
  return solve_rational(m, ones).has_value();
}

TerminalClassification classify_terminal_3d(const WallRelation& w) {
  if (w.n != 3)
    domain_error("PreconditionFailed", "classify_terminal_3d", "ambient rank must be 3");
  if (w.b[3] != 1)
    domain_error("PreconditionFailed", "classify_terminal_3d", "b4 must equal 1");
  Cone first_three = Cone::from_rays(3, {w.rays[0], w.rays[1], w.rays[2]});
  if (!is_smooth(first_three) || first_three.ray_count() != 3)
    domain_error("PreconditionFailed", "classify_terminal_3d",
                 "u1, u2, u3 must form a lattice basis");

  const Int b1 = w.b[0], b2 = w.b[1], b3 = w.b[2];
  if (b1 == -1 && b2 == -1 && b3 == 1) return {TerminalKind::Flop, 0, 0};

  auto try_pattern = [&](const Int& x, const Int& y) -> std::optional<TerminalClassification> {
    // type B: (-a, -1, r, 1)
    if (y == -1) {
      Int a = -x, r = b3;
      if (a > 0 && a < r && boost::multiprecision::gcd(a, r) == 1)
        return TerminalClassification{TerminalKind::TypeB, a, r};
    }
    // type A: (-a, -(r-a), r, 1)
    {
      Int a = -x, ra = -y, r = b3;
      if (a > 0 && ra > 0 && a + ra == r && a < r && boost::multiprecision::gcd(a, r) == 1)
        return TerminalClassification{TerminalKind::TypeA, a, r};
    }
    return std::nullopt;
  };

  if (b1 < 0 && b2 < 0 && b3 > 0) {
    if (auto c = try_pattern(b1, b2)) return *c;
    if (auto c = try_pattern(b2, b1)) return *c;
  }
  return {TerminalKind::Unclassified, 0, 0};
}

namespace {

// Exact enumeration of the lattice points of Conv(0, rays) with their
// barycentric sums; visit(point, sum_of_coords) for each.
template <typename Visit>
void scan_simplex_points(const Cone& c, Visit visit) {
  if (!is_simplicial(c) || c.ray_count() != c.rank())
    domain_error("NotSimplicial", "simplex_scan", "cone must be simplicial of full rank");
  const std::size_t n = c.rank();
  IntMat g = IntMat::from_cols(c.rays(), n);
  std::vector<Int> lo(n, 0), hi(n, 0);
  for (const IntVec& v : c.rays()) {
    for (std::size_t i = 0; i < n; ++i) {
      lo[i] = std::min(lo[i], v[i]);
      hi[i] = std::max(hi[i], v[i]);
    }
  }
  IntVec x(n);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      std::vector<Rat> rhs(n);
      for (std::size_t t = 0; t < n; ++t) rhs[t] = Rat(x[t]);
      std::optional<std::vector<Rat>> lam = solve_rational(g, rhs);
      Rat total(0);
      for (const Rat& l : *lam) {
        if (l < 0) return;
        total += l;
      }
      if (total > 1) return;
      visit(x, total);
      return;
    }
    for (Int v = lo[i]; v <= hi[i]; ++v) {
      x[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
}

}  // namespace

bool is_terminal_cone(const Cone& c) {
  std::set<IntVec> rays(c.rays().begin(), c.rays().end());
  bool ok = true;
  scan_simplex_points(c, [&](const IntVec& p, const Rat&) {
    if (!ok) return;
    if (p.is_zero() || rays.count(p)) return;
    ok = false;
  });
  return ok;
}

bool is_canonical_cone(const Cone& c) {
  bool ok = true;
  scan_simplex_points(c, [&](const IntVec& p, const Rat& total) {
    if (!ok) return;
    if (p.is_zero()) return;
    if (total != 1) ok = false;
  });
  return ok;
}

SmoothFlopClass classify_smooth_flop(const WallRelation& w) {
  if (!is_flop(w)) return {};
  if (!is_smooth(w.sigma_without(w.n - 1)) || !is_smooth(w.sigma_without(w.n))) return {};
  for (std::size_t i : w.j_minus)
    if (w.b[i] != -1) return {};
  for (std::size_t j : w.j_plus)
    if (w.b[j] != 1) return {};
  if (w.j_minus.size() != w.j_plus.size()) return {};
  return {true, w.j_minus.size() - 1};
}

}  // namespace toric
