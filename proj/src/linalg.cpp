#include "nilp/linalg.hpp"

#include "nilp/errors.hpp"

#include <string>
#include <utility>

namespace nilp {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw DimensionError(what);
}

// In-place Gauss-Jordan elimination on the first `ncols` columns.
// Returns the pivot columns.
std::vector<std::size_t> eliminate(Matrix& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const Scalar inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const Scalar f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

Vec add(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), "vector length mismatch in add");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), "vector length mismatch in sub");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec scaled(const Scalar& c, const Vec& v) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

void axpy(Vec& y, const Scalar& c, const Vec& x) {
  require(y.size() == x.size(), "vector length mismatch in axpy");
  if (is_zero(c)) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!is_zero(x[i])) y[i] += c * x[i];
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(std::span<const Vec> rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].size() == cols, "row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_columns(std::span<const Vec> cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    require(cols[j].size() == rows, "column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Vec Matrix::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec Matrix::col(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

bool Matrix::is_zero() const { return nilp::is_zero(data_); }

Vec Matrix::apply(const Vec& x) const {
  require(x.size() == cols_, "matrix-vector dimension mismatch");
  Vec y(rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (nilp::is_zero(x[j])) continue;
    for (std::size_t i = 0; i < rows_; ++i)
      if (!nilp::is_zero((*this)(i, j))) y[i] += (*this)(i, j) * x[j];
  }
  return y;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require(a.cols_ == b.rows_, "matrix product dimension mismatch");
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix sum dimension mismatch");
  Matrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix difference dimension mismatch");
  Matrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

Matrix rref(const Matrix& m) {
  Matrix r = m;
  eliminate(r, r.cols());
  return r;
}

std::vector<std::size_t> pivot_columns(const Matrix& m) {
  Matrix r = m;
  return eliminate(r, r.cols());
}

std::size_t rank(const Matrix& m) { return pivot_columns(m).size(); }

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  require(a.rows() == b.size(), "solve: right-hand side length mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const auto pivots = eliminate(aug, a.cols());
  for (std::size_t i = pivots.size(); i < aug.rows(); ++i)
    if (!is_zero(aug(i, a.cols()))) return std::nullopt;
  Vec x(a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, a.cols());
  return x;
}

Subspace Subspace::zero(std::size_t ambient_dim) {
  return Subspace(ambient_dim, Matrix(0, ambient_dim), {});
}

Subspace Subspace::full(std::size_t ambient_dim) {
  std::vector<std::size_t> piv(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) piv[i] = i;
  return Subspace(ambient_dim, Matrix::identity(ambient_dim), std::move(piv));
}

std::vector<Vec> Subspace::basis_vectors() const {
  std::vector<Vec> out;
  out.reserve(dim());
  for (std::size_t r = 0; r < dim(); ++r) out.push_back(basis_.row(r));
  return out;
}

Vec Subspace::residual(const Vec& v) const {
  require(v.size() == ambient_dim_, "subspace ambient dimension mismatch");
  Vec w = v;
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    const Scalar c = w[pivots_[r]];
    if (nilp::is_zero(c)) continue;
    for (std::size_t j = 0; j < ambient_dim_; ++j)
      if (!nilp::is_zero(basis_(r, j))) w[j] -= c * basis_(r, j);
  }
  return w;
}

Subspace span(std::span<const Vec> vectors, std::size_t ambient_dim) {
  Matrix m = Matrix::from_rows(vectors, ambient_dim);
  auto pivots = eliminate(m, ambient_dim);
  Matrix basis(pivots.size(), ambient_dim);
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < ambient_dim; ++j) basis(i, j) = m(i, j);
  return Subspace(ambient_dim, std::move(basis), std::move(pivots));
}

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  require(u.ambient_dim() == v.ambient_dim(), "subspace_sum: ambient dimension mismatch");
  auto vecs = u.basis_vectors();
  for (auto& b : v.basis_vectors()) vecs.push_back(std::move(b));
  return span(vecs, u.ambient_dim());
}

bool subspace_contains(const Subspace& u, const Vec& w) { return is_zero(u.residual(w)); }

bool subspace_leq(const Subspace& u, const Subspace& v) {
  require(u.ambient_dim() == v.ambient_dim(), "subspace_leq: ambient dimension mismatch");
  if (u.dim() > v.dim()) return false;
  for (const auto& b : u.basis_vectors())
    if (!subspace_contains(v, b)) return false;
  return true;
}

bool subspace_eq(const Subspace& u, const Subspace& v) {
  require(u.ambient_dim() == v.ambient_dim(), "subspace_eq: ambient dimension mismatch");
  return u == v;
}

Subspace image(const Matrix& m, const Subspace& u) {
  require(m.cols() == u.ambient_dim(), "image: dimension mismatch");
  std::vector<Vec> imgs;
  for (const auto& b : u.basis_vectors()) imgs.push_back(m.apply(b));
  return span(imgs, m.rows());
}

Subspace column_space(const Matrix& m) { return image(m, Subspace::full(m.cols())); }

}  // namespace nilp
