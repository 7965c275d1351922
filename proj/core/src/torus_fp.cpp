#include "toric/torus_fp.hpp"

namespace toric {

std::vector<IntVec> lattice_fiber_product(const IntMat& phi1, const IntMat& phi2) {
  if (phi1.rows() != phi2.rows())
    domain_error("TargetMismatch", "lattice_fiber_product", "maps have different target ranks");
  IntMat stacked(phi1.rows(), phi1.cols() + phi2.cols());
  for (std::size_t i = 0; i < phi1.rows(); ++i) {
    for (std::size_t j = 0; j < phi1.cols(); ++j) stacked.at(i, j) = phi1.at(i, j);
    for (std::size_t j = 0; j < phi2.cols(); ++j)
      stacked.at(i, phi1.cols() + j) = -phi2.at(i, j);
  }
  return kernel_basis(stacked);
}

TorusFpDecomposition torus_fp_decomposition(const IntMat& phi1, const IntMat& phi2) {
  if (phi1.rows() != phi2.rows())
    domain_error("TargetMismatch", "torus_fp_decomposition", "maps have different target ranks");
  // stacked dual map [phi1^T; -phi2^T] : M0 -> M1 + M2
  const std::size_t n0 = phi1.rows();
  const std::size_t m1 = phi1.cols(), m2 = phi2.cols();
  IntMat dual(m1 + m2, n0);
  for (std::size_t i = 0; i < m1; ++i)
    for (std::size_t j = 0; j < n0; ++j) dual.at(i, j) = phi1.at(j, i);
  for (std::size_t i = 0; i < m2; ++i)
    for (std::size_t j = 0; j < n0; ++j) dual.at(m1 + i, j) = -phi2.at(j, i);

  SnfDecomposition snf = smith_normal_form(dual);
  TorusFpDecomposition out;
  out.rank_r = snf.invariant_factors.size();
  out.torus_dim = m1 + m2 - out.rank_r;
  for (const Int& d : snf.invariant_factors)
    if (d > 1) out.finite_part.push_back(d);

  std::size_t kernel_dim = lattice_fiber_product(phi1, phi2).size();
  if (kernel_dim != out.torus_dim)
    domain_error("InternalInvariantViolation", "torus_fp_decomposition",
                 "torus dimension disagrees with the kernel lattice rank");
  return out;
}

}  // namespace toric
