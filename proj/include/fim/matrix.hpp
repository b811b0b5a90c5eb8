#pragma once

// Dense exact matrices and the subspace operations built on Gaussian
// elimination. Pivots are always the first nonzero entry in row order, so
// every basis produced here is deterministic.
//
// Subspaces are passed around as matrices whose columns form a basis.

#include <cstddef>
#include <optional>
#include <vector>

#include "fim/scalar.hpp"

namespace fim {

using Vector = std::vector<Scalar>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(const Field& field, std::size_t rows, std::size_t cols);

  static Matrix zero(const Field& field, std::size_t rows, std::size_t cols) {
    return Matrix(field, rows, cols);
  }
  static Matrix identity(const Field& field, std::size_t n);
  static Matrix from_ints(const Field& field, const std::vector<std::vector<std::int64_t>>& rows);
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static Matrix from_columns(const Field& field, std::size_t rows, const std::vector<Vector>& cols);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  std::vector<Vector> columns() const;
  Vector row(std::size_t r) const;

  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix operator*(const Matrix& rhs) const;
  Matrix operator*(const Scalar& s) const;
  Vector operator*(const Vector& v) const;

  bool operator==(const Matrix& rhs) const;

  bool is_zero() const;

 private:
  void check_compatible(const Matrix& rhs) const;

  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix power(const Matrix& a, std::size_t exponent);

/// Side-by-side concatenation [a | b].
Matrix hconcat(const Matrix& a, const Matrix& b);

/// Reduced row echelon form; pivot columns are reported in order.
Matrix rref(Matrix a, std::vector<std::size_t>* pivot_columns = nullptr);

std::size_t rank(const Matrix& a);

/// Rank of a family of vectors of equal length. Skips zero entries, so it is
/// suited to wide sparse families.
std::size_t rank_of_vectors(std::vector<Vector> vectors);

/// Basis of ker(a) as columns: one vector per free column, with that free
/// variable set to 1 and the others to 0.
Matrix kernel_basis(const Matrix& a);

/// The pivot columns of a: a basis of the column space drawn from a itself.
Matrix column_basis(const Matrix& a);

/// A solution of a * v = b with every free variable set to zero.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

std::optional<Matrix> inverse(const Matrix& a);

/// Basis of span(u) ∩ span(w), where u and w have independent columns.
Matrix intersect(const Matrix& u, const Matrix& w);

/// Dimension of the span of the columns.
inline std::size_t span_dimension(const Matrix& basis) { return rank(basis); }

bool in_span(const Matrix& basis, const Vector& v);

/// True if every column of sub lies in span(super).
bool span_contains(const Matrix& super, const Matrix& sub);

/// Extends the independent columns of base greedily by columns of extra that
/// are not already in the span, in order.
Matrix extend_basis(const Matrix& base, const Matrix& extra);

}  // namespace fim
