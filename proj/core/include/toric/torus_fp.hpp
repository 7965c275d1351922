#pragma once

#include <vector>

#include "toric/lattice.hpp"

namespace toric {

// Basis of N1 x_{N0} N2 = ker(phi1, -phi2) inside Z^{n1+n2}.
std::vector<IntVec> lattice_fiber_product(const IntMat& phi1, const IntMat& phi2);

// Invariants of the scheme T x G attached to a fiber product of tori: the
// torus dimension and the orders of the finite cyclic factors, read off the
// Smith normal form of the stacked dual map.
struct TorusFpDecomposition {
  std::size_t torus_dim = 0;
  std::vector<Int> finite_part;  // invariant factors > 1, divisibility order
  std::size_t rank_r = 0;        // rank of the stacked dual matrix
};

TorusFpDecomposition torus_fp_decomposition(const IntMat& phi1, const IntMat& phi2);

}  // namespace toric
