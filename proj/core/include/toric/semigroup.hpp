#pragma once

#include <map>
#include <optional>
#include <vector>

#include "toric/cone.hpp"

namespace toric {

// The semigroup Z_{>=0} * generators inside Z^rank. Generators are nonzero,
// deduplicated and sorted.
struct AffineSemigroup {
  std::size_t rank = 0;
  std::vector<IntVec> generators;

  static AffineSemigroup from_generators(std::size_t rank, std::vector<IntVec> gens);
};

struct MembershipCertificate {
  bool present = false;
  // generator index -> multiplicity, only nonzero entries, aligned with the
  // semigroup's generator order
  std::vector<std::pair<std::size_t, Int>> coefficients;
  std::optional<IntVec> separating_functional;  // proves m outside Cone(generators)
};

// Prepared membership decision procedure for one semigroup: facet data and
// the bounding functional are computed once.
class SemigroupOracle {
 public:
  SemigroupOracle(std::size_t rank, std::vector<IntVec> generators);

  MembershipCertificate member(const IntVec& m) const;
  const std::vector<IntVec>& generators() const { return gens_; }

 private:
  bool search(IntVec remaining, std::size_t from,
              std::vector<std::pair<std::size_t, Int>>& stack) const;

  std::size_t rank_;
  std::vector<IntVec> gens_;
  std::vector<IntVec> facets_;    // inequalities of Cone(generators)
  std::vector<IntVec> span_eq_;   // equalities of Cone(generators)
  IntVec ell_;                    // sum of facet normals; 0 exactly on the lineality
  std::vector<std::size_t> positive_;  // indices with ell > 0, sorted by decreasing ell
  std::vector<std::size_t> unit_;      // indices with ell = 0 (lineality part)
  IntMat unit_mat_;                    // columns = unit generators
};

// Minimal generating set of C^dual ∩ M (the Hilbert basis) for a strongly
// convex cone C of rank <= 6. When C is not full-dimensional the dual is not
// pointed; the returned set still generates but minimality is best-effort.
AffineSemigroup hilbert_basis(const Cone& c);

MembershipCertificate member(const AffineSemigroup& s, const IntVec& m);

AffineSemigroup semigroup_sum(const AffineSemigroup& a, const AffineSemigroup& b);

struct SaturationResult {
  bool saturated = false;
  std::optional<IntVec> witness;  // lattice point of the cone missing from the semigroup
};
SaturationResult is_saturated(const AffineSemigroup& s);

struct SumEqualityResult {
  bool equal = false;
  std::optional<IntVec> witness;  // element of S_{sigma ∩ sigma'} missing from the sum
};
// Decides S_sigma + S_sigma' = S_{sigma ∩ sigma'}.
SumEqualityResult check_semigroup_sum_equality(const Cone& sigma, const Cone& sigma_p);

// m0 in S_sigma with m0 + m1 and m0 + m2 in S_sigma.
IntVec find_interior_shift(const Cone& sigma, const IntVec& m1, const IntVec& m2);

// Generating set of D ∩ Z^rank for an arbitrary rational cone D (triangulate,
// collect fundamental parallelepiped points, reduce when pointed).
std::vector<IntVec> cone_lattice_generators(const Cone& d);

}  // namespace toric
