#include <doctest.h>

#include <random>

#include "toric/lattice.hpp"

using namespace toric;

namespace {

IntVec v(std::initializer_list<long> xs) {
  IntVec out(xs.size());
  std::size_t i = 0;
  for (long x : xs) out[i++] = x;
  return out;
}

IntMat mat(std::size_t rows, std::size_t cols, std::initializer_list<long> xs) {
  std::vector<Int> e;
  for (long x : xs) e.emplace_back(x);
  return IntMat(rows, cols, std::move(e));
}

std::mt19937 rng(20240913);

IntMat random_mat(std::size_t rows, std::size_t cols, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = d(rng);
  return m;
}

bool is_unimodular(const IntMat& m) {
  Int det = determinant(m);
  return det == 1 || det == -1;
}

}  // namespace

TEST_SUITE("lattice") {
  TEST_CASE("primitive examples") {
    CHECK(primitive(v({2, 4, 6})) == v({1, 2, 3}));
    CHECK(primitive(v({0, -5})) == v({0, -1}));
    CHECK(primitive(v({3, 7})) == v({3, 7}));
    CHECK_THROWS_AS(primitive(v({0, 0})), DomainError);
  }

  TEST_CASE("primitive is idempotent") {
    for (int trial = 0; trial < 100; ++trial) {
      IntMat m = random_mat(1, 4, -9, 9);
      IntVec x = m.row(0);
      if (x.is_zero()) continue;
      IntVec p = primitive(x);
      CHECK(primitive(p) == p);
    }
  }

  TEST_CASE("snf pinned examples") {
    SUBCASE("diag(2,3) has invariant factors (1,6)") {
      SnfDecomposition s = smith_normal_form(mat(2, 2, {2, 0, 0, 3}));
      REQUIRE(s.invariant_factors.size() == 2);
      CHECK(s.invariant_factors[0] == 1);
      CHECK(s.invariant_factors[1] == 6);
    }
    SUBCASE("(2,-2)^T has invariant factor (2)") {
      SnfDecomposition s = smith_normal_form(mat(2, 1, {2, -2}));
      REQUIRE(s.invariant_factors.size() == 1);
      CHECK(s.invariant_factors[0] == 2);
    }
    SUBCASE("(2,-3)^T has invariant factor (1)") {
      SnfDecomposition s = smith_normal_form(mat(2, 1, {2, -3}));
      REQUIRE(s.invariant_factors.size() == 1);
      CHECK(s.invariant_factors[0] == 1);
    }
  }

  TEST_CASE("snf decomposition properties on random matrices") {
    std::uniform_int_distribution<std::size_t> dims(1, 6);
    for (int trial = 0; trial < 200; ++trial) {
      IntMat a = random_mat(dims(rng), dims(rng), -9, 9);
      SnfDecomposition s = smith_normal_form(a);
      CHECK(s.u * a * s.v == s.d);
      CHECK(is_unimodular(s.u));
      CHECK(is_unimodular(s.v));
      for (std::size_t i = 0; i + 1 < s.invariant_factors.size(); ++i) {
        CHECK(s.invariant_factors[i] > 0);
        CHECK(s.invariant_factors[i + 1] % s.invariant_factors[i] == 0);
      }
      // zero diagonal entries only after the nonzero ones
      bool seen_zero = false;
      for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) {
        if (s.d.at(i, i) == 0) seen_zero = true;
        if (seen_zero) CHECK(s.d.at(i, i) == 0);
      }
    }
  }

  TEST_CASE("product of invariant factors equals gcd of maximal-rank minors") {
    std::uniform_int_distribution<std::size_t> dims(1, 4);
    int done = 0;
    while (done < 50) {
      std::size_t r = dims(rng), c = dims(rng);
      IntMat a = random_mat(r, c, -6, 6);
      std::size_t rk = lattice_rank(a);
      if (rk != std::min(r, c)) continue;  // full-rank inputs only
      ++done;
      SnfDecomposition s = smith_normal_form(a);
      Int prod = 1;
      for (const Int& f : s.invariant_factors) prod *= f;
      // gcd over all rk x rk minors
      Int g = 0;
      std::vector<std::size_t> rsel, csel;
      auto enum_cols = [&](auto&& self, std::size_t start) -> void {
        if (csel.size() == rk) {
          IntMat sub(rk, rk);
          for (std::size_t i = 0; i < rk; ++i)
            for (std::size_t j = 0; j < rk; ++j) sub.at(i, j) = a.at(rsel[i], csel[j]);
          g = boost::multiprecision::gcd(g, determinant(sub));
          return;
        }
        for (std::size_t j = start; j < c; ++j) {
          csel.push_back(j);
          self(self, j + 1);
          csel.pop_back();
        }
      };
      auto enum_rows = [&](auto&& self, std::size_t start) -> void {
        if (rsel.size() == rk) {
          enum_cols(enum_cols, 0);
          return;
        }
        for (std::size_t i = start; i < r; ++i) {
          rsel.push_back(i);
          self(self, i + 1);
          rsel.pop_back();
        }
      };
      enum_rows(enum_rows, 0);
      CHECK(prod == boost::multiprecision::abs(g));
    }
  }

  TEST_CASE("hnf pinned examples") {
    SUBCASE("identity") {
      auto [h, u] = hermite_normal_form(IntMat::identity(3));
      CHECK(h == IntMat::identity(3));
      CHECK(u == IntMat::identity(3));
    }
    SUBCASE("already hnf") {
      IntMat a = mat(2, 2, {2, 0, 0, 3});
      auto [h, u] = hermite_normal_form(a);
      CHECK(h == a);
    }
    SUBCASE("determinant preserved up to sign") {
      IntMat a = mat(2, 2, {1, 2, 3, 4});
      auto [h, u] = hermite_normal_form(a);
      CHECK(boost::multiprecision::abs(determinant(h)) == 2);
      CHECK(u * a == h);
      CHECK(is_unimodular(u));
    }
  }

  TEST_CASE("hnf properties on random matrices") {
    std::uniform_int_distribution<std::size_t> dims(1, 6);
    for (int trial = 0; trial < 200; ++trial) {
      IntMat a = random_mat(dims(rng), dims(rng), -9, 9);
      auto [h, u] = hermite_normal_form(a);
      CHECK(u * a == h);
      CHECK(is_unimodular(u));
      // echelon shape with positive pivots and reduced columns
      std::size_t last_pivot = 0;
      bool started = false;
      for (std::size_t i = 0; i < h.rows(); ++i) {
        std::size_t p = h.cols();
        for (std::size_t j = 0; j < h.cols(); ++j)
          if (h.at(i, j) != 0) {
            p = j;
            break;
          }
        if (p == h.cols()) {
          for (std::size_t i2 = i; i2 < h.rows(); ++i2) CHECK(h.row(i2).is_zero());
          break;
        }
        if (started) CHECK(p > last_pivot);
        last_pivot = p;
        started = true;
        CHECK(h.at(i, p) > 0);
        for (std::size_t i2 = 0; i2 < i; ++i2) {
          CHECK(h.at(i2, p) >= 0);
          CHECK(h.at(i2, p) < h.at(i, p));
        }
      }
    }
  }

  TEST_CASE("kernel pinned examples") {
    SUBCASE("e1 e2 e3 e1+e2-e3") {
      IntMat a = mat(3, 4, {1, 0, 0, 1, 0, 1, 0, 1, 0, 0, 1, -1});
      std::vector<IntVec> k = kernel_basis(a);
      REQUIRE(k.size() == 1);
      CHECK(k[0] == v({1, 1, -1, -1}));
      CHECK(a.apply(k[0]).is_zero());
      CHECK(lattice_rank(a) == 3);
    }
    SUBCASE("identity is injective") { CHECK(kernel_basis(IntMat::identity(2)).empty()); }
    SUBCASE("1x2 (2 -3)") {
      std::vector<IntVec> k = kernel_basis(mat(1, 2, {2, -3}));
      REQUIRE(k.size() == 1);
      CHECK(k[0] == v({3, 2}));
    }
  }

  TEST_CASE("kernel basis spans every brute-force kernel vector") {
    std::uniform_int_distribution<std::size_t> dims(1, 4);
    for (int trial = 0; trial < 25; ++trial) {
      std::size_t r = dims(rng), c = dims(rng);
      IntMat a = random_mat(r, c, -4, 4);
      std::vector<IntVec> k = kernel_basis(a);
      CHECK(k.size() == c - lattice_rank(a));
      for (const IntVec& x : k) CHECK(a.apply(x).is_zero());
      if (!k.empty())
        CHECK(lattice_rank(IntMat::from_rows(k, c)) == k.size());  // independent

      IntMat kmat = IntMat::from_cols(k, c);
      IntVec x(c);
      auto scan = [&](auto&& self, std::size_t i) -> void {
        if (i == c) {
          if (!a.apply(x).is_zero()) return;
          CHECK(solve_integral(kmat, x).has_value());
          return;
        }
        for (Int t = -5; t <= 5; ++t) {
          x[i] = t;
          self(self, i + 1);
        }
      };
      scan(scan, 0);
    }
  }

  TEST_CASE("integral and rational solvers") {
    IntMat a = mat(2, 2, {2, 0, 0, 3});
    std::optional<IntVec> x = solve_integral(a, v({4, -9}));
    REQUIRE(x.has_value());
    CHECK(a.apply(*x) == v({4, -9}));
    CHECK(!solve_integral(a, v({1, 0})).has_value());

    std::vector<Rat> b = {Rat(1), Rat(1)};
    std::optional<std::vector<Rat>> y = solve_rational(a, b);
    REQUIRE(y.has_value());
    CHECK((*y)[0] == Rat(1, 2));
    CHECK((*y)[1] == Rat(1, 3));

    // inconsistent system
    IntMat c = mat(2, 1, {1, 1});
    CHECK(!solve_rational(c, {Rat(0), Rat(1)}).has_value());
  }

  TEST_CASE("saturated span basis") {
    // span of (2,0) inside Z^2 saturates to the x-axis lattice
    std::vector<IntVec> basis = saturated_span_basis({v({2, 0})}, 2);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == v({1, 0}));
  }
}
