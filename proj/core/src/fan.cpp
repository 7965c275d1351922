#include "toric/fan.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace toric {

Cone Fan::cone(std::size_t i) const {
  std::vector<IntVec> gens;
  for (std::size_t r : max_cones[i]) gens.push_back(rays[r]);
  return Cone::from_rays(rank, gens);
}

Fan make_fan(std::size_t rank, const std::vector<Cone>& maximal) {
  // dedup by canonical ray sets
  std::map<std::vector<IntVec>, Cone> uniq;
  for (const Cone& c : maximal) uniq.emplace(c.rays(), c);
  std::vector<Cone> cones;
  for (auto& [key, c] : uniq) cones.push_back(c);

  // drop cones strictly contained in another
  std::vector<Cone> kept;
  for (std::size_t i = 0; i < cones.size(); ++i) {
    bool contained = false;
    for (std::size_t j = 0; j < cones.size() && !contained; ++j) {
      if (i == j) continue;
      if (cone_subset(cones[i], cones[j]) && !cone_subset(cones[j], cones[i])) contained = true;
    }
    if (!contained) kept.push_back(cones[i]);
  }

  std::set<IntVec> ray_set;
  for (const Cone& c : kept)
    for (const IntVec& r : c.rays()) ray_set.insert(r);
  Fan f;
  f.rank = rank;
  f.rays.assign(ray_set.begin(), ray_set.end());
  std::map<IntVec, std::size_t> index;
  for (std::size_t i = 0; i < f.rays.size(); ++i) index[f.rays[i]] = i;

  std::set<std::vector<std::size_t>> cone_set;
  for (const Cone& c : kept) {
    std::vector<std::size_t> idx;
    for (const IntVec& r : c.rays()) idx.push_back(index[r]);
    std::sort(idx.begin(), idx.end());
    cone_set.insert(idx);
  }
  f.max_cones.assign(cone_set.begin(), cone_set.end());
  return f;
}

FanValidation validate_fan(const Fan& f) {
  std::vector<Cone> cones;
  for (std::size_t i = 0; i < f.size(); ++i) cones.push_back(f.cone(i));
  for (std::size_t i = 0; i < cones.size(); ++i) {
    if (!is_strongly_convex(cones[i]))
      return {false, FanViolation{"not_strongly_convex", i, i}};
  }
  for (std::size_t i = 0; i < cones.size(); ++i) {
    for (std::size_t j = i + 1; j < cones.size(); ++j) {
      if (cone_subset(cones[i], cones[j]) || cone_subset(cones[j], cones[i]))
        return {false, FanViolation{"contained_cone", i, j}};
      Cone meet = intersect(cones[i], cones[j]);
      if (!is_face(meet, cones[i]) || !is_face(meet, cones[j]))
        return {false, FanViolation{"intersection_not_face", i, j}};
    }
  }
  return {true, std::nullopt};
}

namespace {

// Exact cover test: do the full-dimensional members of `pieces` cover `cell`?
// Recursively split along the pieces' facet hyperplanes; each leaf is either
// inside one piece or witnesses a gap.
bool covers(const Cone& cell, const std::vector<Cone>& pieces,
            const std::vector<IntVec>& hyperplanes, std::size_t from) {
  for (std::size_t h = from; h < hyperplanes.size(); ++h) {
    const IntVec& a = hyperplanes[h];
    bool pos = false, neg = false;
    for (const IntVec& r : cell.rays()) {
      Int p = dot(a, r);
      if (p > 0) pos = true;
      if (p < 0) neg = true;
    }
    if (pos && neg) {
      const HRep& hr = cell.hrep();
      std::vector<IntVec> ineq_a = hr.ineq;
      ineq_a.push_back(a);
      std::vector<IntVec> ineq_b = hr.ineq;
      ineq_b.push_back(-a);
      Cone half_a = cone_from_hrep(cell.rank(), ineq_a, hr.eq);
      Cone half_b = cone_from_hrep(cell.rank(), ineq_b, hr.eq);
      return covers(half_a, pieces, hyperplanes, h + 1) &&
             covers(half_b, pieces, hyperplanes, h + 1);
    }
  }
  IntVec sample = relative_interior_point(cell);
  for (const Cone& p : pieces)
    if (contains(p, sample)) return true;
  return false;
}

// Support-equality half of the refinement test for one base cone.
bool base_cone_covered(const Cone& base_cone, const std::vector<Cone>& inside) {
  const std::size_t ambient = base_cone.rank();
  if (base_cone.rays().empty()) return true;  // zero cone
  std::vector<IntVec> basis = saturated_span_basis(base_cone.rays(), ambient);
  const std::size_t d = basis.size();
  IntMat bmat = IntMat::from_cols(basis, ambient);

  auto to_coords = [&](const Cone& c) {
    std::vector<IntVec> gens;
    for (const IntVec& r : c.rays()) {
      std::optional<IntVec> x = solve_integral(bmat, r);
      if (!x) return std::optional<Cone>();
      gens.push_back(*x);
    }
    return std::optional<Cone>(Cone::from_rays(d, gens));
  };

  std::optional<Cone> cell = to_coords(base_cone);
  std::vector<Cone> pieces;
  std::vector<IntVec> hyperplanes;
  for (const Cone& c : inside) {
    std::optional<Cone> cc = to_coords(c);
    if (!cc) continue;  // not inside the span lattice: cannot contribute
    if (cc->dim() < d) continue;  // lower-dimensional pieces carry no support
    for (const IntVec& f : cc->hrep().ineq) hyperplanes.push_back(sign_normalized(f));
    pieces.push_back(std::move(*cc));
  }
  std::sort(hyperplanes.begin(), hyperplanes.end());
  hyperplanes.erase(std::unique(hyperplanes.begin(), hyperplanes.end()), hyperplanes.end());
  return covers(*cell, pieces, hyperplanes, 0);
}

}  // namespace

bool is_refinement(const Fan& f, const Fan& base) {
  if (f.rank != base.rank)
    domain_error("RankMismatch", "is_refinement", "fans live in different ambient ranks");
  std::vector<Cone> fc, bc;
  for (std::size_t i = 0; i < f.size(); ++i) fc.push_back(f.cone(i));
  for (std::size_t i = 0; i < base.size(); ++i) bc.push_back(base.cone(i));

  std::vector<std::vector<Cone>> inside(bc.size());
  for (const Cone& c : fc) {
    bool placed = false;
    for (std::size_t j = 0; j < bc.size(); ++j) {
      if (cone_subset(c, bc[j])) {
        inside[j].push_back(c);
        placed = true;
      }
    }
    if (!placed) return false;
  }
  for (std::size_t j = 0; j < bc.size(); ++j) {
    if (!base_cone_covered(bc[j], inside[j])) return false;
  }
  return true;
}

Fan coarsest_common_refinement(const Fan& f, const Fan& f_p, const Fan& base) {
  if (!is_refinement(f, base) || !is_refinement(f_p, base))
    domain_error("NotARefinement", "coarsest_common_refinement",
                 "both fans must refine the base fan");
  std::vector<Cone> bc;
  for (std::size_t i = 0; i < base.size(); ++i) bc.push_back(base.cone(i));
  std::vector<Cone> result;
  for (std::size_t i = 0; i < f.size(); ++i) {
    Cone ci = f.cone(i);
    for (std::size_t j = 0; j < f_p.size(); ++j) {
      Cone cj = f_p.cone(j);
      bool common_base = false;
      for (const Cone& b : bc) {
        if (cone_subset(ci, b) && cone_subset(cj, b)) {
          common_base = true;
          break;
        }
      }
      if (!common_base) continue;
      result.push_back(intersect(ci, cj));
    }
  }
  Fan out = make_fan(f.rank, result);
  FanValidation val = validate_fan(out);
  if (!val.ok)
    domain_error("InternalInvariantViolation", "coarsest_common_refinement",
                 "pairwise intersections do not assemble into a fan");
  return out;
}

std::vector<Wall> walls(const Fan& f) {
  const std::size_t n = f.rank;
  for (std::size_t i = 0; i < f.size(); ++i) {
    Cone c = f.cone(i);
    if (c.ray_count() != n || !is_simplicial(c))
      domain_error("NotSimplicial", "walls",
                   "fan must be pure, full-dimensional and simplicial");
  }
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> facet_owners;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto& idx = f.max_cones[i];
    for (std::size_t drop = 0; drop < idx.size(); ++drop) {
      std::vector<std::size_t> facet;
      for (std::size_t t = 0; t < idx.size(); ++t)
        if (t != drop) facet.push_back(idx[t]);
      facet_owners[facet].push_back(i);
    }
  }
  std::vector<Wall> out;
  for (const auto& [facet, owners] : facet_owners) {
    if (owners.size() < 2) continue;
    if (owners.size() > 2)
      domain_error("InvalidFan", "walls", "a codimension-one cone is shared by >2 maximal cones");
    std::vector<IntVec> gens;
    for (std::size_t r : facet) gens.push_back(f.rays[r]);
    out.push_back(Wall{Cone::from_rays(n, gens), owners[0], owners[1]});
  }
  std::sort(out.begin(), out.end(), [](const Wall& x, const Wall& y) {
    return std::pair(x.a, x.b) < std::pair(y.a, y.b);
  });
  return out;
}

FanFiberProduct fan_fiber_product(const Fan& f1, const Fan& f2, const Fan& base,
                                  const IntMat& phi1, const IntMat& phi2) {
  if (phi1.rows() != phi2.rows())
    domain_error("TargetMismatch", "fan_fiber_product", "maps have different target ranks");
  if (phi1.cols() != f1.rank || phi2.cols() != f2.rank)
    domain_error("TargetMismatch", "fan_fiber_product", "map source does not match fan rank");

  std::vector<Cone> bc;
  for (std::size_t i = 0; i < base.size(); ++i) bc.push_back(base.cone(i));

  auto image_cone = [&](const Cone& c, const IntMat& phi) {
    std::vector<IntVec> gens;
    for (const IntVec& r : c.rays()) {
      IntVec img = phi.apply(r);
      if (!img.is_zero()) gens.push_back(img);
    }
    return Cone::from_rays(phi.rows(), gens);
  };

  auto collect_faces = [&](const Fan& f, const IntMat& phi) {
    std::set<std::vector<IntVec>> seen;
    std::vector<Cone> out;
    for (std::size_t i = 0; i < f.size(); ++i) {
      Cone c = f.cone(i);
      bool compatible = false;
      Cone img = image_cone(c, phi);
      for (const Cone& b : bc)
        if (cone_subset(img, b)) {
          compatible = true;
          break;
        }
      if (!compatible)
        domain_error("IncompatibleMap", "fan_fiber_product",
                     "a maximal cone's image is not contained in any base cone");
      std::vector<Cone> fs = faces(c);
      for (Cone& face : fs)
        if (seen.insert(face.rays()).second) out.push_back(std::move(face));
    }
    return out;
  };

  std::vector<Cone> faces1 = collect_faces(f1, phi1);
  std::vector<Cone> faces2 = collect_faces(f2, phi2);

  std::vector<Cone> pieces;
  std::vector<IntVec> kernel;
  bool have_kernel = false;
  for (const Cone& c1 : faces1) {
    Cone img1 = image_cone(c1, phi1);
    for (const Cone& c2 : faces2) {
      Cone img2 = image_cone(c2, phi2);
      bool admissible = false;
      for (const Cone& b : bc) {
        if (cone_subset(img1, b) && cone_subset(img2, b)) {
          admissible = true;
          break;
        }
      }
      if (!admissible) continue;
      ConeFiberProduct fp = cone_fiber_product(c1, c2, phi1, phi2);
      if (!have_kernel) {
        kernel = fp.kernel_basis;
        have_kernel = true;
      }
      pieces.push_back(std::move(fp.cone));
    }
  }
  if (!have_kernel) {
    IntMat stacked(phi1.rows(), phi1.cols() + phi2.cols());
    for (std::size_t i = 0; i < phi1.rows(); ++i) {
      for (std::size_t j = 0; j < phi1.cols(); ++j) stacked.at(i, j) = phi1.at(i, j);
      for (std::size_t j = 0; j < phi2.cols(); ++j)
        stacked.at(i, phi1.cols() + j) = -phi2.at(i, j);
    }
    kernel = kernel_basis(stacked);
  }

  FanFiberProduct out;
  out.fan = make_fan(kernel.size(), pieces);
  out.kernel_basis = std::move(kernel);
  FanValidation val = validate_fan(out.fan);
  if (!val.ok)
    domain_error("InternalInvariantViolation", "fan_fiber_product",
                 "fiber-product cones do not assemble into a fan");
  return out;
}

}  // namespace toric
