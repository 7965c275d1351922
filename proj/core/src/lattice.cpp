#include "toric/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace toric {

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Int floor_mod(const Int& a, const Int& b) { return a - floor_div(a, b) * b; }

Int ceil_div(const Int& a, const Int& b) { return -floor_div(-a, b); }

bool IntVec::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const Int& x) { return x == 0; });
}

IntVec IntVec::operator+(const IntVec& o) const {
  IntVec r(dim());
  for (std::size_t i = 0; i < dim(); ++i) r[i] = e_[i] + o[i];
  return r;
}

IntVec IntVec::operator-(const IntVec& o) const {
  IntVec r(dim());
  for (std::size_t i = 0; i < dim(); ++i) r[i] = e_[i] - o[i];
  return r;
}

IntVec IntVec::operator-() const {
  IntVec r(dim());
  for (std::size_t i = 0; i < dim(); ++i) r[i] = -e_[i];
  return r;
}

IntVec IntVec::operator*(const Int& c) const {
  IntVec r(dim());
  for (std::size_t i = 0; i < dim(); ++i) r[i] = e_[i] * c;
  return r;
}

std::strong_ordering operator<=>(const IntVec& a, const IntVec& b) {
  if (a.dim() != b.dim()) return a.dim() <=> b.dim();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string IntVec::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < dim(); ++i) {
    if (i) os << ',';
    os << e_[i];
  }
  os << ')';
  return os.str();
}

Int dot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

IntMat::IntMat(std::size_t rows, std::size_t cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
  if (e_.size() != rows_ * cols_)
    domain_error("DimensionMismatch", "IntMat", "entry count does not match rows*cols");
}

IntMat IntMat::identity(std::size_t n) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::from_rows(const std::vector<IntVec>& rows, std::size_t cols) {
  IntMat m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  return m;
}

IntMat IntMat::from_cols(const std::vector<IntVec>& cols, std::size_t rows) {
  IntMat m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
  return m;
}

IntVec IntMat::row(std::size_t i) const {
  IntVec r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

IntVec IntMat::col(std::size_t j) const {
  IntVec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

IntMat IntMat::transpose() const {
  IntMat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMat IntMat::operator*(const IntMat& o) const {
  IntMat r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (at(i, k) == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
    }
  return r;
}

IntVec IntMat::apply(const IntVec& x) const {
  IntVec r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r[i] += at(i, j) * x[j];
  return r;
}

std::string IntMat::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << "; ";
    os << row(i).str();
  }
  os << ']';
  return os.str();
}

IntVec primitive(const IntVec& v) {
  if (v.is_zero()) domain_error("ZeroVector", "primitive", "cannot normalize the zero vector");
  Int g = 0;
  for (std::size_t i = 0; i < v.dim(); ++i) g = boost::multiprecision::gcd(g, v[i]);
  IntVec r(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) r[i] = v[i] / g;
  return r;
}

IntVec sign_normalized(const IntVec& v) {
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (v[i] > 0) return v;
    if (v[i] < 0) return -v;
  }
  return v;
}

namespace {

void swap_rows(IntMat& m, std::size_t i, std::size_t j) {
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(i, c), m.at(j, c));
}

void add_row_multiple(IntMat& m, std::size_t dst, std::size_t src, const Int& q) {
  if (q == 0) return;
  for (std::size_t c = 0; c < m.cols(); ++c) m.at(dst, c) += q * m.at(src, c);
}

void negate_row(IntMat& m, std::size_t i) {
  for (std::size_t c = 0; c < m.cols(); ++c) m.at(i, c) = -m.at(i, c);
}

void swap_cols(IntMat& m, std::size_t i, std::size_t j) {
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m.at(r, i), m.at(r, j));
}

void add_col_multiple(IntMat& m, std::size_t dst, std::size_t src, const Int& q) {
  if (q == 0) return;
  for (std::size_t r = 0; r < m.rows(); ++r) m.at(r, dst) += q * m.at(r, src);
}

}  // namespace

std::pair<IntMat, IntMat> hermite_normal_form(const IntMat& a) {
  IntMat h = a;
  IntMat u = IntMat::identity(a.rows());
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    // Euclidean elimination below row r in column c.
    while (true) {
      std::size_t pivot = h.rows();
      for (std::size_t i = r; i < h.rows(); ++i) {
        if (h.at(i, c) == 0) continue;
        if (pivot == h.rows() || boost::multiprecision::abs(h.at(i, c)) <
                                     boost::multiprecision::abs(h.at(pivot, c)))
          pivot = i;
      }
      if (pivot == h.rows()) break;  // column is zero below r
      if (pivot != r) {
        swap_rows(h, r, pivot);
        swap_rows(u, r, pivot);
      }
      bool any = false;
      for (std::size_t i = r + 1; i < h.rows(); ++i) {
        if (h.at(i, c) == 0) continue;
        Int q = floor_div(h.at(i, c), h.at(r, c));
        add_row_multiple(h, i, r, -q);
        add_row_multiple(u, i, r, -q);
        if (h.at(i, c) != 0) any = true;
      }
      if (!any) break;
    }
    if (h.at(r, c) == 0) continue;
    if (h.at(r, c) < 0) {
      negate_row(h, r);
      negate_row(u, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Int q = floor_div(h.at(i, c), h.at(r, c));
      add_row_multiple(h, i, r, -q);
      add_row_multiple(u, i, r, -q);
    }
    ++r;
  }
  return {h, u};
}

SnfDecomposition smith_normal_form(const IntMat& a) {
  IntMat d = a;
  IntMat u = IntMat::identity(a.rows());
  IntMat v = IntMat::identity(a.cols());
  const std::size_t k = std::min(a.rows(), a.cols());

  for (std::size_t t = 0; t < k; ++t) {
    // Find a pivot of minimal absolute value in the trailing submatrix.
    std::size_t pi = a.rows(), pj = a.cols();
    for (std::size_t i = t; i < a.rows(); ++i)
      for (std::size_t j = t; j < a.cols(); ++j) {
        if (d.at(i, j) == 0) continue;
        if (pi == a.rows() || boost::multiprecision::abs(d.at(i, j)) <
                                  boost::multiprecision::abs(d.at(pi, pj))) {
          pi = i;
          pj = j;
        }
      }
    if (pi == a.rows()) break;  // trailing submatrix is zero
    if (pi != t) {
      swap_rows(d, t, pi);
      swap_rows(u, t, pi);
    }
    if (pj != t) {
      swap_cols(d, t, pj);
      swap_cols(v, t, pj);
    }

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (d.at(i, t) == 0) continue;
        Int q = floor_div(d.at(i, t), d.at(t, t));
        add_row_multiple(d, i, t, -q);
        add_row_multiple(u, i, t, -q);
        if (d.at(i, t) != 0) {
          swap_rows(d, t, i);
          swap_rows(u, t, i);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (d.at(t, j) == 0) continue;
        Int q = floor_div(d.at(t, j), d.at(t, t));
        add_col_multiple(d, j, t, -q);
        add_col_multiple(v, j, t, -q);
        if (d.at(t, j) != 0) {
          swap_cols(d, t, j);
          swap_cols(v, t, j);
          clean = false;
        }
      }
      if (clean) {
        // Enforce the divisibility chain: fold in any non-divisible entry.
        for (std::size_t i = t + 1; i < a.rows() && clean; ++i)
          for (std::size_t j = t + 1; j < a.cols() && clean; ++j) {
            if (d.at(i, j) % d.at(t, t) != 0) {
              add_row_multiple(d, t, i, 1);
              add_row_multiple(u, t, i, 1);
              clean = false;
            }
          }
      }
    }
    if (d.at(t, t) < 0) {
      negate_row(d, t);
      negate_row(u, t);
    }
  }

  SnfDecomposition out{u, d, v, {}};
  for (std::size_t t = 0; t < k; ++t)
    if (d.at(t, t) != 0) out.invariant_factors.push_back(d.at(t, t));
  return out;
}

std::vector<IntVec> kernel_basis(const IntMat& a) {
  // Rows of U matching zero rows of H = U * A^T combine columns of A to zero.
  auto [h, u] = hermite_normal_form(a.transpose());
  std::vector<IntVec> basis;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    if (h.row(i).is_zero()) basis.push_back(sign_normalized(primitive(u.row(i))));
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

std::size_t lattice_rank(const IntMat& a) {
  auto [h, u] = hermite_normal_form(a);
  std::size_t r = 0;
  for (std::size_t i = 0; i < h.rows(); ++i)
    if (!h.row(i).is_zero()) ++r;
  return r;
}

Int determinant(const IntMat& a) {
  // Bareiss fraction-free elimination.
  if (a.rows() != a.cols()) domain_error("DimensionMismatch", "determinant", "matrix not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMat m = a;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m.at(p, k) == 0) ++p;
      if (p == n) return 0;
      swap_rows(m, k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

std::optional<std::vector<Rat>> solve_rational(const IntMat& a, const std::vector<Rat>& b) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = Rat(a.at(i, j));
    m[i][cols] = b[i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c] / m[r][c];
      for (std::size_t j = c; j <= cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (m[i][cols] != 0) return std::nullopt;
  std::vector<Rat> x(cols, Rat(0));
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = m[i][cols] / m[i][pivot_col[i]];
  return x;
}

std::optional<IntVec> solve_integral(const IntMat& a, const IntVec& b) {
  // Column-style HNF: A * U^T = H^T with row-HNF H = U_hnf * A^T.
  auto [h, u] = hermite_normal_form(a.transpose());
  IntMat ht = h.transpose();   // a * ut = ht
  IntMat ut = u.transpose();
  const std::size_t rows = a.rows(), cols = a.cols();
  IntVec z(cols);
  IntVec rem = b;
  // ht is lower-triangular by columns: column j has its first nonzero entry
  // at a strictly increasing row index.
  std::size_t row_cursor = 0;
  for (std::size_t j = 0; j < cols; ++j) {
    // locate pivot row of column j
    std::size_t p = rows;
    for (std::size_t i = row_cursor; i < rows; ++i) {
      if (ht.at(i, j) != 0) {
        p = i;
        break;
      }
    }
    if (p == rows) continue;  // zero column
    // entries of rem above p must already be zero
    for (std::size_t i = row_cursor; i < p; ++i)
      if (rem[i] != 0) return std::nullopt;
    if (rem[p] % ht.at(p, j) != 0) return std::nullopt;
    Int q = rem[p] / ht.at(p, j);
    z[j] = q;
    for (std::size_t i = 0; i < rows; ++i) rem[i] -= q * ht.at(i, j);
    row_cursor = p + 1;
  }
  if (!rem.is_zero()) return std::nullopt;
  return ut.apply(z);
}

std::vector<IntVec> saturated_span_basis(const std::vector<IntVec>& vectors, std::size_t dim) {
  if (vectors.empty()) return {};
  // orthogonal complement of the span, then its complement again: saturation.
  IntMat rows_mat = IntMat::from_rows(vectors, dim);
  std::vector<IntVec> perp = kernel_basis(rows_mat);
  if (perp.empty()) {
    std::vector<IntVec> basis;
    for (std::size_t i = 0; i < dim; ++i) {
      IntVec e(dim);
      e[i] = 1;
      basis.push_back(e);
    }
    return basis;
  }
  IntMat perp_mat = IntMat::from_rows(perp, dim);
  return kernel_basis(perp_mat);
}

}  // namespace toric
