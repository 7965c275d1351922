#include <doctest.h>

#include <random>

#include "toric/flip.hpp"

using namespace toric;

namespace {

IntVec v(std::initializer_list<long> xs) {
  IntVec out(xs.size());
  std::size_t i = 0;
  for (long x : xs) out[i++] = x;
  return out;
}

Cone cone(std::size_t rank, std::initializer_list<IntVec> rays) {
  return Cone::from_rays(rank, std::vector<IntVec>(rays));
}

const IntVec e1 = v({1, 0, 0});
const IntVec e2 = v({0, 1, 0});
const IntVec e3 = v({0, 0, 1});

WallRelation relation_3d(long b1, long b2, long b3) {
  // u4 = -b1 u1 - b2 u2 - b3 u3 with u1,u2,u3 the standard basis
  return WallRelation::from_rays(3, {e1, e2, e3, v({-b1, -b2, -b3})});
}

std::mt19937 rng(90210);

IntMat random_unimodular(std::size_t n) {
  // product of elementary row operations applied to the identity
  IntMat m = IntMat::identity(n);
  std::uniform_int_distribution<int> coef(-2, 2);
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  for (int step = 0; step < 12; ++step) {
    std::size_t i = idx(rng), j = idx(rng);
    if (i == j) continue;
    Int c = coef(rng);
    for (std::size_t t = 0; t < n; ++t) m.at(i, t) += c * m.at(j, t);
  }
  return m;
}

}  // namespace

TEST_SUITE("flip") {
  TEST_CASE("wall relation from adjacent cones") {
    SUBCASE("elementary flop") {
      WallRelation w =
          wall_relation(cone(3, {e1, e2, e3}), cone(3, {e1, e2, v({1, 1, -1})}));
      CHECK(w.b == v({-1, -1, 1, 1}));
      CHECK(w.j_minus == std::vector<std::size_t>{0, 1});
      CHECK(w.j_plus == std::vector<std::size_t>{2, 3});
      // relation really vanishes
      IntVec total(3);
      for (std::size_t i = 0; i < 4; ++i) total = total + w.rays[i] * w.b[i];
      CHECK(total.is_zero());
      // swapping the argument order gives the same normalized output
      WallRelation w2 =
          wall_relation(cone(3, {e1, e2, v({1, 1, -1})}), cone(3, {e1, e2, e3}));
      CHECK(w2.b == w.b);
      CHECK(w2.rays == w.rays);
    }
    SUBCASE("weighted relation (-1,-1,2,1)") {
      WallRelation w =
          wall_relation(cone(3, {e1, e2, e3}), cone(3, {e1, e2, v({1, 1, -2})}));
      CHECK(w.b == v({-1, -1, 2, 1}));
    }
    SUBCASE("degenerate rays are rejected") {
      CHECK_THROWS_AS(wall_relation(cone(3, {e1, e2, v({1, 1, 0})}),
                                    cone(3, {e1, e2, v({2, 2, 0})})),
                      DomainError);
    }
    SUBCASE("non-adjacent cones are rejected") {
      CHECK_THROWS_AS(
          wall_relation(cone(3, {e1, e2, e3}), cone(3, {v({-1, 0, 0}), v({0, -1, 0}), e3})),
          DomainError);
    }
  }

  TEST_CASE("wall relation invariants on random relations") {
    std::uniform_int_distribution<int> neg(-4, -1), pos(1, 4);
    for (int trial = 0; trial < 40; ++trial) {
      long b1 = neg(rng), b2 = neg(rng), b3 = pos(rng);
      WallRelation w = relation_3d(b1, b2, b3);
      IntVec total(3);
      for (std::size_t i = 0; i < 4; ++i) total = total + w.rays[i] * w.b[i];
      CHECK(total.is_zero());
      Int g = 0;
      for (std::size_t i = 0; i < 4; ++i) g = boost::multiprecision::gcd(g, w.b[i]);
      CHECK(g == 1);
      CHECK(w.b[3] > 0);
    }
  }

  TEST_CASE("flip fans") {
    SUBCASE("elementary flop decompositions") {
      WallRelation w = relation_3d(-1, -1, 1);
      FlipFans fans = flip_fans(w);
      CHECK(fans.sigma_fan.size() == 2);
      CHECK(fans.sigma_prime_fan.size() == 2);
      CHECK(validate_fan(fans.sigma_fan).ok);
      CHECK(validate_fan(fans.sigma_prime_fan).ok);
      Fan base = make_fan(3, {fans.sigma0});
      CHECK(is_refinement(fans.sigma_fan, base));
      CHECK(is_refinement(fans.sigma_prime_fan, base));
      // the coarsest common refinement contains the exchanged ray
      Fan ccr = coarsest_common_refinement(fans.sigma_fan, fans.sigma_prime_fan, base);
      IntVec u = w.exchanged_ray();
      CHECK(u == v({1, 1, 0}));
      bool present = false;
      for (const IntVec& r : ccr.rays) present = present || r == u;
      CHECK(present);
    }
    SUBCASE("weighted flip still covers sigma0") {
      WallRelation w = relation_3d(-1, -1, 2);
      FlipFans fans = flip_fans(w);
      Fan base = make_fan(3, {fans.sigma0});
      CHECK(is_refinement(fans.sigma_fan, base));
      CHECK(is_refinement(fans.sigma_prime_fan, base));
    }
    SUBCASE("divisorial side is rejected") {
      WallRelation w = WallRelation::from_rays(3, {e1, e2, e3, v({1, -1, -1})});
      // b = (-1, 1, 1, 1): only one negative index
      CHECK(w.j_minus.size() == 1);
      CHECK_THROWS_AS(flip_fans(w), DomainError);
    }
  }

  TEST_CASE("flop detection") {
    CHECK(is_flop(relation_3d(-1, -1, 1)));
    CHECK(!is_flop(relation_3d(-1, -1, 2)));
    // b1 + b2 + b3 + 1 = 0 forces the flop hyperplane through a basis
    CHECK(is_flop(relation_3d(-2, -4, 5)));
    CHECK(is_flop(relation_3d(-3, -5, 7)));
    CHECK(!is_flop(relation_3d(-2, -4, 7)));
  }

  TEST_CASE("flop detection is invariant under relabeling and basis change") {
    std::uniform_int_distribution<int> neg(-4, -1), pos(1, 4);
    for (int trial = 0; trial < 30; ++trial) {
      long b1 = neg(rng), b2 = neg(rng), b3 = pos(rng);
      WallRelation w = relation_3d(b1, b2, b3);
      bool flop = is_flop(w);

      std::vector<IntVec> relabeled = {w.rays[1], w.rays[2], w.rays[0], w.rays[3]};
      CHECK(is_flop(WallRelation::from_rays(3, relabeled)) == flop);

      IntMat u = random_unimodular(3);
      std::vector<IntVec> transformed;
      for (const IntVec& r : w.rays) transformed.push_back(u.apply(r));
      CHECK(is_flop(WallRelation::from_rays(3, transformed)) == flop);
    }
  }

  TEST_CASE("terminal classification") {
    CHECK(classify_terminal_3d(relation_3d(-1, -1, 1)).kind == TerminalKind::Flop);
    TerminalClassification b = classify_terminal_3d(relation_3d(-1, -1, 2));
    CHECK(b.kind == TerminalKind::TypeB);
    CHECK(b.a == 1);
    CHECK(b.r == 2);
    TerminalClassification a = classify_terminal_3d(relation_3d(-1, -2, 3));
    CHECK(a.kind == TerminalKind::TypeA);
    CHECK(a.a == 1);
    CHECK(a.r == 3);
    CHECK(classify_terminal_3d(relation_3d(-2, -3, 3)).kind == TerminalKind::Unclassified);
    CHECK_THROWS_AS(classify_terminal_3d(WallRelation::from_rays(
                        3, {e1, e2, v({1, 1, -2}), v({0, 0, 1})})),
                    DomainError);  // u1,u2,u3 not a basis... or b4 != 1
  }

  TEST_CASE("classified relations have terminal plus-side cones") {
    for (long r = 2; r <= 6; ++r) {
      for (long a = 1; a < r; ++a) {
        if (boost::multiprecision::gcd(Int(a), Int(r)) != 1) continue;
        for (bool type_a : {true, false}) {
          long b2 = type_a ? -(r - a) : -1;
          WallRelation w = relation_3d(-a, b2, r);
          TerminalClassification tc = classify_terminal_3d(w);
          CHECK(tc.kind != TerminalKind::Unclassified);
          for (std::size_t j : w.j_plus) {
            Cone c = w.sigma_without(j);
            if (is_simplicial(c) && c.ray_count() == 3) CHECK(is_terminal_cone(c));
          }
        }
      }
    }
  }

  TEST_CASE("terminal and canonical cones") {
    CHECK(is_terminal_cone(cone(3, {e1, e2, e3})));
    CHECK(is_canonical_cone(cone(3, {e1, e2, e3})));
    // sigma_3 of the (-3,-5,7,1) relation is canonical but not terminal
    Cone s3 = cone(3, {e1, e2, v({3, 5, -7})});
    CHECK(is_canonical_cone(s3));
    CHECK(!is_terminal_cone(s3));
    // rank-2 wedge with an interior segment point
    Cone wedge = cone(2, {v({1, 0}), v({1, 2})});
    CHECK(!is_terminal_cone(wedge));
    CHECK(is_canonical_cone(wedge));
  }

  TEST_CASE("smooth flop classification") {
    SUBCASE("elementary flop has ordinary rank 1") {
      SmoothFlopClass c = classify_smooth_flop(relation_3d(-1, -1, 1));
      CHECK(c.ordinary);
      CHECK(c.rank == 1);
    }
    SUBCASE("weighted wall is not a smooth flop") {
      CHECK(!classify_smooth_flop(relation_3d(-1, -1, 2)).ordinary);
    }
    SUBCASE("5d ordinary rank 2") {
      std::vector<IntVec> rays;
      for (std::size_t i = 0; i < 5; ++i) {
        IntVec e(5);
        e[i] = 1;
        rays.push_back(e);
      }
      rays.push_back(v({1, 1, 1, -1, -1}));
      SmoothFlopClass c = classify_smooth_flop(WallRelation::from_rays(5, rays));
      CHECK(c.ordinary);
      CHECK(c.rank == 2);
    }
  }
}
