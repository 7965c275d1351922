#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toric/cone.hpp"

namespace toric {

// A fan stored by its maximal cones: a global list of primitive rays plus
// one sorted ray-index set per maximal cone. Faces are generated on demand.
struct Fan {
  std::size_t rank = 0;
  std::vector<IntVec> rays;
  std::vector<std::vector<std::size_t>> max_cones;

  Cone cone(std::size_t i) const;
  std::size_t size() const { return max_cones.size(); }
};

// Canonicalize: primitive rays, deduplicated, lexicographically sorted;
// cones that are contained in other cones are dropped.
Fan make_fan(std::size_t rank, const std::vector<Cone>& maximal);

struct FanViolation {
  std::string kind;  // "not_strongly_convex" | "intersection_not_face" | "contained_cone"
  std::size_t a = 0, b = 0;
};

struct FanValidation {
  bool ok = true;
  std::optional<FanViolation> violation;
};

FanValidation validate_fan(const Fan& f);

// Every cone of f contained in a cone of base, and the supports agree. The
// support check splits each base cone along the facet hyperplanes of the
// covering cones and tests one interior rational point per leaf cell.
bool is_refinement(const Fan& f, const Fan& base);

// The fan {sigma ∩ sigma' : common base cone exists}, reduced to maximal
// cones. Throws NotARefinement unless both fans refine the base.
Fan coarsest_common_refinement(const Fan& f, const Fan& f_p, const Fan& base);

struct Wall {
  Cone wall;
  std::size_t a = 0, b = 0;  // indices of the two adjacent maximal cones
};

// Codimension-one cones shared by exactly two maximal cones. Requires a
// pure, full-dimensional, simplicial fan.
std::vector<Wall> walls(const Fan& f);

struct FanFiberProduct {
  Fan fan;                           // in coordinates of kernel_basis
  std::vector<IntVec> kernel_basis;  // basis of N1 x_{N0} N2
};

FanFiberProduct fan_fiber_product(const Fan& f1, const Fan& f2, const Fan& base,
                                  const IntMat& phi1, const IntMat& phi2);

}  // namespace toric
