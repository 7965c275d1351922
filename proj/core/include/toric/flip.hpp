#pragma once

#include <optional>
#include <vector>

#include "toric/fan.hpp"

namespace toric {

// The normalized linear relation sum b_i u_i = 0 among the n+1 primitive
// rays around a wall. gcd of the |b_i| is 1 and b_{n+1} > 0; the index sets
// partition {0..n} by the sign of b.
struct WallRelation {
  std::size_t n = 0;             // ambient rank
  std::vector<IntVec> rays;      // u_1 .. u_{n+1}
  IntVec b;                      // dim n+1
  std::vector<std::size_t> j_minus, j_zero, j_plus;  // 0-based positions

  // Build from rays in the given order; the unique (up to sign) relation is
  // computed and normalized so the last coefficient is positive.
  static WallRelation from_rays(std::size_t rank, std::vector<IntVec> rays);

  Cone sigma0() const;                    // Cone(u_1..u_{n+1})
  Cone sigma_without(std::size_t j) const;  // cone on all rays except u_j
  IntVec exchanged_ray() const;           // primitive of -sum_{J-} b_i u_i
};

// Relation attached to two adjacent full-dimensional simplicial cones: wall
// rays first (lex sorted), then the two opposite rays (lex sorted). Checks
// b_n > 0 as well.
WallRelation wall_relation(const Cone& sigma_a, const Cone& sigma_b);

struct FlipFans {
  Fan sigma_fan;        // maximal cones sigma_j, j in J_+
  Fan sigma_prime_fan;  // maximal cones sigma_j, j in J_-
  Cone sigma0;
};

// The two local decompositions of sigma0 attached to the relation. Requires
// |J_-| >= 2 (small contraction side) and sigma0 strongly convex.
FlipFans flip_fans(const WallRelation& w);

// True iff all rays lie on a common affine hyperplane <m, .> = 1 over Q.
bool is_flop(const WallRelation& w);

enum class TerminalKind { Flop, TypeA, TypeB, Unclassified };

struct TerminalClassification {
  TerminalKind kind = TerminalKind::Unclassified;
  Int a = 0, r = 0;  // meaningful for TypeA / TypeB
};

// Pattern-match the normalized 3-dimensional relation against the terminal
// wall-relation patterns (-a,-(r-a),r,1), (-a,-1,r,1) and (-1,-1,1,1) with
// 0 < a < r, gcd(a, r) = 1. Requires {u1,u2,u3} to be a lattice basis and
// b4 = 1.
TerminalClassification classify_terminal_3d(const WallRelation& w);

// Terminal: Conv(0, rays) has no lattice points besides 0 and the rays.
// Canonical: every nonzero lattice point of Conv(0, rays) lies on Conv(rays).
bool is_terminal_cone(const Cone& c);
bool is_canonical_cone(const Cone& c);

struct SmoothFlopClass {
  bool ordinary = false;
  std::size_t rank = 0;  // projective-space rank of the ordinary flop
};

// Ordinary iff the two wall-adjacent cones are smooth, the relation is a
// flop, b = -1 on J_-, b = +1 on J_+ and |J_-| = |J_+|.
SmoothFlopClass classify_smooth_flop(const WallRelation& w);

}  // namespace toric
