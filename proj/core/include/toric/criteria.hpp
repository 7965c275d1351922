#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toric/flip.hpp"
#include "toric/semigroup.hpp"

namespace toric {

enum class Verdict { Yes, No, Undetermined };

std::string verdict_str(Verdict v);

struct NormalityResult {
  Verdict verdict = Verdict::Undetermined;
  std::optional<IntVec> witness;  // lattice point of S_{sigma∩sigma'} missing from the sum
  std::size_t pairs_checked = 0;
  std::string note;
};

// Semigroup-sum equality over the cross pairs (sigma_j, sigma_i), j in J_+,
// i in J_-. Same-side pairs meet along common faces and satisfy the equality
// automatically; all_pairs re-checks them anyway.
NormalityResult check_graph_closure_normal(const WallRelation& w, bool all_pairs = false);

struct ReducedResult {
  Verdict verdict = Verdict::Undetermined;
  std::optional<Int> failing_lambda;
  std::string note;
};

// Remainder criterion for the distinguished 3-dimensional affine chart:
// for every 0 <= lambda <= b1'*b2' some 0 <= y <= lambda/b1' satisfies
// {g*lambda}_{b3} >= g * {lambda - b1'*y}_{b2'}. Requires b1, b2 < 0 < b3
// (b4 = 1 implicit).
ReducedResult reduced_criterion_3d(const Int& b1, const Int& b2, const Int& b3);

// Independent enumeration: every (p1,p2,p3) in [0,bound]^3 with
// -b2 p2 >= -b1 p1 + b3 p3 must admit (q1,q2) with
//   -b2 q2 >= -b1 q1, q1 >= p1, q2 <= p2,
//   b1 p1 - b2 p2 - b3 p3 >= b1 q1 - b2 q2.
// Decisive once bound >= b1'*b2'*max(b1',b2',b3).
Verdict reduced_oracle_3d(const Int& b1, const Int& b2, const Int& b3, long bound);

struct FlopReducedResult {
  Verdict verdict = Verdict::Undetermined;
  std::optional<std::pair<Int, Int>> certificate;  // (y1, y2) with b3 = b1'y1 + b2'y2
};

// Flop case b3 = -b1-b2-1: reduced iff b3 is in the numerical semigroup
// generated by b1' and b2'.
FlopReducedResult flop_reduced_criterion(const Int& b1, const Int& b2);

struct SmoothReducedResult {
  Verdict verdict = Verdict::Undetermined;
  std::optional<std::pair<Int, Int>> offending;  // a J_- coefficient pair failing divisibility
};

// Pairwise divisibility of the J_- coefficients; requires every sigma_j,
// j in J_+, to be smooth (which forces b_j = 1 there).
SmoothReducedResult smooth_reduced_criterion(const WallRelation& w);

// Route a wall relation to the applicable reducedness criterion: the 3d
// chart criterion when a plus-side cone is smooth, the divisibility
// criterion when the whole plus side is smooth, Undetermined otherwise.
ReducedResult wall_reduced_criterion(const WallRelation& w);

// Certificate search for the representability condition on the region
// z_1 <= 0 <= z_i, sum b_i z_i <= 0, |z_i| <= bound: z' supported on
// J_- (plus the extra J_+ index when |J_+| = 2) with sum b_i z_i' = 0 and
// z - z' componentwise nonnegative.
Verdict spade_oracle(const WallRelation& w, long bound);

// Exponent vectors over the three generator blocks (A0 | A\A0 | A'\A0).
struct ExponentTriple {
  std::vector<Int> a0, a, ap;
};

// Connectivity of two monomial exponent triples under single moves that fix
// one outer block while re-expressing the rest inside its relation lattice;
// breadth-first over total degree <= degree_bound. false means "not
// connected within the bound".
bool binomial_connectivity_oracle(const std::vector<IntVec>& gens_a0,
                                  const std::vector<IntVec>& gens_a,
                                  const std::vector<IntVec>& gens_ap,
                                  const ExponentTriple& start, const ExponentTriple& end,
                                  long degree_bound);

// Default degree bound: three times the larger input degree.
bool binomial_connectivity_oracle(const std::vector<IntVec>& gens_a0,
                                  const std::vector<IntVec>& gens_a,
                                  const std::vector<IntVec>& gens_ap,
                                  const ExponentTriple& start, const ExponentTriple& end);

struct DiagnosisReport {
  WallRelation wall;
  NormalityResult graph_closure_normal;
  ReducedResult fiber_product_reduced;
  Verdict irreducible = Verdict::Yes;  // always yes for flip data
  Verdict x_equals_x_tilde = Verdict::Undetermined;
  std::vector<std::string> notes;
};

DiagnosisReport diagnose(const WallRelation& w, bool all_pairs = false);

}  // namespace toric
