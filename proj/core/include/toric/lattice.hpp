#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "toric/errors.hpp"

namespace toric {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Floor division/remainder (cpp_int's operator/ truncates toward zero).
Int floor_div(const Int& a, const Int& b);
Int floor_mod(const Int& a, const Int& b);
Int ceil_div(const Int& a, const Int& b);

// An integer vector of fixed dimension. Dimension 0 is allowed so that
// rank-0 lattices (trivial fans, zero maps) stay representable.
class IntVec {
 public:
  IntVec() = default;
  explicit IntVec(std::size_t dim) : e_(dim) {}
  IntVec(std::initializer_list<Int> init) : e_(init) {}
  explicit IntVec(std::vector<Int> entries) : e_(std::move(entries)) {}

  std::size_t dim() const { return e_.size(); }
  const Int& operator[](std::size_t i) const { return e_[i]; }
  Int& operator[](std::size_t i) { return e_[i]; }
  const std::vector<Int>& entries() const { return e_; }

  bool is_zero() const;

  IntVec operator+(const IntVec& o) const;
  IntVec operator-(const IntVec& o) const;
  IntVec operator-() const;
  IntVec operator*(const Int& c) const;

  friend bool operator==(const IntVec& a, const IntVec& b) { return a.e_ == b.e_; }
  friend std::strong_ordering operator<=>(const IntVec& a, const IntVec& b);

  std::string str() const;

 private:
  std::vector<Int> e_;
};

Int dot(const IntVec& a, const IntVec& b);

// Row-major integer matrix; rows or cols may be zero.
class IntMat {
 public:
  IntMat() : rows_(0), cols_(0) {}
  IntMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
  IntMat(std::size_t rows, std::size_t cols, std::vector<Int> entries);

  static IntMat identity(std::size_t n);
  static IntMat from_rows(const std::vector<IntVec>& rows, std::size_t cols);
  static IntMat from_cols(const std::vector<IntVec>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Int& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
  Int& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }

  IntVec row(std::size_t i) const;
  IntVec col(std::size_t j) const;
  IntMat transpose() const;
  IntMat operator*(const IntMat& o) const;
  IntVec apply(const IntVec& x) const;  // matrix * column vector

  friend bool operator==(const IntMat& a, const IntMat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

  std::string str() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Int> e_;
};

struct SnfDecomposition {
  IntMat u;  // unimodular, rows x rows
  IntMat d;  // diagonal, u*a*v = d
  IntMat v;  // unimodular, cols x cols
  std::vector<Int> invariant_factors;  // nonzero diagonal entries, d1 | d2 | ...
};

// v / gcd(entries); first nonzero entry keeps its sign. Throws ZeroVector on v = 0.
IntVec primitive(const IntVec& v);

// Canonical sign: scale by -1 if the first nonzero entry is negative.
IntVec sign_normalized(const IntVec& v);

// Row-style Hermite normal form H = U * A with U unimodular. Pivots are
// positive, entries above a pivot are reduced into [0, pivot), zero rows
// come last.
std::pair<IntMat, IntMat> hermite_normal_form(const IntMat& a);

SnfDecomposition smith_normal_form(const IntMat& a);

// Basis of { x : A x = 0 } over Z; each vector primitive with first nonzero
// entry positive, lexicographically sorted.
std::vector<IntVec> kernel_basis(const IntMat& a);

std::size_t lattice_rank(const IntMat& a);
Int determinant(const IntMat& a);

// One rational solution of A x = b, if consistent.
std::optional<std::vector<Rat>> solve_rational(const IntMat& a, const std::vector<Rat>& b);

// One integral solution of A x = b, if one exists.
std::optional<IntVec> solve_integral(const IntMat& a, const IntVec& b);

// Basis of the saturated sublattice span_Q(vectors) ∩ Z^dim.
std::vector<IntVec> saturated_span_basis(const std::vector<IntVec>& vectors, std::size_t dim);

}  // namespace toric
