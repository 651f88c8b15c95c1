#pragma once

#include "nilp/scalar.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace nilp {

/// Coordinate vector with respect to a fixed basis.
using Vec = std::vector<Scalar>;

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scaled(const Scalar& c, const Vec& v);
/// y += c * x
void axpy(Vec& y, const Scalar& c, const Vec& x);

/// Dense row-major matrix over Q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::span<const Vec> rows, std::size_t cols);
  static Matrix from_columns(std::span<const Vec> cols, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;
  bool is_zero() const;

  /// Matrix-vector product acting on coordinate columns.
  Vec apply(const Vec& x) const;
  Matrix transposed() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form. Shape is preserved; zero rows sink to the bottom.
Matrix rref(const Matrix& m);
/// Pivot columns of rref(m), strictly increasing.
std::vector<std::size_t> pivot_columns(const Matrix& m);
std::size_t rank(const Matrix& m);

/// One exact solution of a x = b with free variables set to zero, or
/// nullopt if the system is inconsistent.
std::optional<Vec> solve(const Matrix& a, const Vec& b);

/// Subspace of Q^n held in canonical form: RREF basis, zero rows dropped.
/// Two subspaces are equal iff their basis matrices are identical.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  bool is_zero() const noexcept { return dim() == 0; }
  const Matrix& basis() const noexcept { return basis_; }
  std::vector<Vec> basis_vectors() const;
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Residual of v after eliminating against the basis. Zero iff v is in the subspace.
  Vec residual(const Vec& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.basis_ == b.basis_;
  }

 private:
  friend Subspace span(std::span<const Vec> vectors, std::size_t ambient_dim);
  Subspace(std::size_t ambient_dim, Matrix basis, std::vector<std::size_t> pivots)
      : ambient_dim_(ambient_dim), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  std::size_t ambient_dim_ = 0;
  Matrix basis_{0, 0};
  std::vector<std::size_t> pivots_;
};

Subspace span(std::span<const Vec> vectors, std::size_t ambient_dim);
inline Subspace span(std::initializer_list<Vec> vectors, std::size_t ambient_dim) {
  return span(std::span<const Vec>(vectors.begin(), vectors.size()), ambient_dim);
}

Subspace subspace_sum(const Subspace& u, const Subspace& v);
bool subspace_contains(const Subspace& u, const Vec& w);
bool subspace_leq(const Subspace& u, const Subspace& v);
bool subspace_eq(const Subspace& u, const Subspace& v);

/// m(u): image of a subspace of the domain of m.
Subspace image(const Matrix& m, const Subspace& u);
/// Column space of m.
Subspace column_space(const Matrix& m);

}  // namespace nilp
