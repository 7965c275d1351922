#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "toric/lattice.hpp"

namespace toric {

// Inequality/equality description of a cone: x belongs to the cone iff
// <f,x> >= 0 for every f in ineq and <e,x> = 0 for every e in eq.
// ineq holds the facet normals within the span, eq a basis of span^perp.
struct HRep {
  std::vector<IntVec> ineq;
  std::vector<IntVec> eq;
};

// A rational polyhedral cone given by primitive generators. Generators are
// deduplicated and lexicographically sorted; for strongly convex cones they
// are reduced to the extreme rays. Non-pointed cones (duals of lower
// dimensional cones) keep explicit +/- generator pairs.
class Cone {
 public:
  Cone();

  static Cone from_rays(std::size_t rank, std::vector<IntVec> generators);
  static Cone zero(std::size_t rank) { return from_rays(rank, {}); }

  std::size_t rank() const { return rank_; }
  const std::vector<IntVec>& rays() const { return rays_; }
  std::size_t ray_count() const { return rays_.size(); }

  const HRep& hrep() const;  // cached, computed on first use
  std::size_t dim() const;   // dimension of the linear span

  std::string str() const;

  friend bool operator==(const Cone& a, const Cone& b) {
    return a.rank_ == b.rank_ && a.rays_ == b.rays_;
  }

 private:
  struct Cache;
  std::size_t rank_;
  std::vector<IntVec> rays_;
  std::shared_ptr<Cache> cache_;
};

Cone dual_cone(const Cone& c);
Cone intersect(const Cone& a, const Cone& b);
Cone cone_sum(const Cone& a, const Cone& b);  // cone generated by both ray sets

bool contains(const Cone& c, const IntVec& x);
bool cone_subset(const Cone& a, const Cone& b);
bool cone_equal(const Cone& a, const Cone& b);

bool is_strongly_convex(const Cone& c);
bool is_simplicial(const Cone& c);
bool is_smooth(const Cone& c);

// F = C ∩ m^perp for some m in the dual cone; accepts the improper face.
bool is_face(const Cone& f, const Cone& c);

// All faces of a strongly convex cone, the zero cone and c itself included.
std::vector<Cone> faces(const Cone& c);

// Sum of the generators: lies in the relative interior.
IntVec relative_interior_point(const Cone& c);

struct ConeFiberProduct {
  Cone cone;                        // in coordinates of kernel_basis
  std::vector<IntVec> kernel_basis; // basis of N1 x_{N0} N2 inside Z^{n1+n2}
};

// {(x1,x2) : x1 in c1, x2 in c2, phi1 x1 = phi2 x2}, written in a basis of
// the fiber-product lattice ker(phi1, -phi2).
ConeFiberProduct cone_fiber_product(const Cone& c1, const Cone& c2, const IntMat& phi1,
                                    const IntMat& phi2);

// Cone from an inequality/equality description.
Cone cone_from_hrep(std::size_t rank, const std::vector<IntVec>& ineq,
                    const std::vector<IntVec>& eq);

// Triangulation of the cone spanned by `generators` (full-dimensional within
// its span is not required of each simplex; the configuration is placed in
// the given order after a lex-first independent seed). Returns index sets of
// cardinality dim(span).
std::vector<std::vector<std::size_t>> placing_triangulation(const std::vector<IntVec>& generators,
                                                            std::size_t dim);

}  // namespace toric
