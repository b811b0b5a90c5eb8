#include "fim/matrix.hpp"

#include <stdexcept>
#include <string>

namespace fim {

Matrix::Matrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

Matrix Matrix::from_ints(const Field& field, const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Scalar::from_int(field, rows[r][c]);
  }
  return m;
}

Matrix Matrix::from_columns(const Field& field, std::size_t rows, const std::vector<Vector>& cols) {
  Matrix m(field, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw std::invalid_argument("column of the wrong length");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

std::vector<Vector> Matrix::columns() const {
  std::vector<Vector> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void Matrix::check_compatible(const Matrix& rhs) const {
  if (!(field_ == rhs.field_))
    throw std::invalid_argument("matrices over different fields");
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  check_compatible(rhs);
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("shape mismatch in +");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  check_compatible(rhs);
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("shape mismatch in -");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  check_compatible(rhs);
  if (cols_ != rhs.rows_) throw std::invalid_argument("shape mismatch in *");
  Matrix out(field_, rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c) {
        const Scalar& b = rhs(k, c);
        if (!b.is_zero()) out(r, c).add_product(a, b);
      }
    }
  }
  return out;
}

Matrix Matrix::operator*(const Scalar& s) const {
  Matrix out = *this;
  for (auto& v : out.data_) v *= s;
  return out;
}

Vector Matrix::operator*(const Vector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("shape mismatch in matrix-vector product");
  Vector out(rows_, Scalar::zero(field_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!v[c].is_zero()) out[r] += (*this)(r, c) * v[c];
  return out;
}

bool Matrix::operator==(const Matrix& rhs) const {
  return field_ == rhs.field_ && rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

bool Matrix::is_zero() const {
  for (const auto& v : data_)
    if (!v.is_zero()) return false;
  return true;
}

Matrix power(const Matrix& a, std::size_t exponent) {
  if (!a.is_square()) throw std::invalid_argument("power of a non-square matrix");
  Matrix result = Matrix::identity(a.field(), a.rows());
  for (std::size_t e = 0; e < exponent; ++e) result = result * a;
  return result;
}

Matrix hconcat(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("row count mismatch in hconcat");
  Matrix out(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
  }
  return out;
}

Matrix rref(Matrix a, std::vector<std::size_t>* pivot_columns) {
  if (pivot_columns) pivot_columns->clear();
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < a.cols() && pivot_row < a.rows(); ++c) {
    std::size_t found = pivot_row;
    while (found < a.rows() && a(found, c).is_zero()) ++found;
    if (found == a.rows()) continue;
    if (found != pivot_row)
      for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(found, k), a(pivot_row, k));
    const Scalar inv = a(pivot_row, c).inverse();
    for (std::size_t k = c; k < a.cols(); ++k) a(pivot_row, k) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == pivot_row || a(r, c).is_zero()) continue;
      const Scalar factor = a(r, c);
      for (std::size_t k = c; k < a.cols(); ++k)
        if (!a(pivot_row, k).is_zero()) a(r, k).subtract_product(factor, a(pivot_row, k));
    }
    if (pivot_columns) pivot_columns->push_back(c);
    ++pivot_row;
  }
  return a;
}

std::size_t rank(const Matrix& a) {
  std::vector<std::size_t> pivots;
  rref(a, &pivots);
  return pivots.size();
}

std::size_t rank_of_vectors(std::vector<Vector> vectors) {
  // Forward elimination on rows, touching only nonzero pivot-row entries.
  std::size_t rank = 0;
  const std::size_t width = vectors.empty() ? 0 : vectors.front().size();
  std::vector<std::pair<std::size_t, std::vector<std::size_t>>> pivots;  // index, support
  for (auto& v : vectors) {
    if (v.size() != width) throw std::invalid_argument("vectors of different lengths");
    for (const auto& [pivot_index, support] : pivots) {
      const auto& pivot_vector = vectors[pivot_index];
      const std::size_t col = support.front();
      if (v[col].is_zero()) continue;
      const Scalar factor = v[col] / pivot_vector[col];
      for (std::size_t k : support) v[k].subtract_product(factor, pivot_vector[k]);
    }
    std::vector<std::size_t> support;
    for (std::size_t k = 0; k < width; ++k)
      if (!v[k].is_zero()) support.push_back(k);
    if (support.empty()) continue;
    pivots.emplace_back(static_cast<std::size_t>(&v - vectors.data()), std::move(support));
    ++rank;
  }
  return rank;
}

Matrix kernel_basis(const Matrix& a) {
  std::vector<std::size_t> pivots;
  const Matrix reduced = rref(a, &pivots);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(a.cols(), Scalar::zero(a.field()));
    v[free] = Scalar::one(a.field());
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -reduced(r, free);
    basis.push_back(std::move(v));
  }
  return Matrix::from_columns(a.field(), a.cols(), basis);
}

Matrix column_basis(const Matrix& a) {
  std::vector<std::size_t> pivots;
  rref(a, &pivots);
  std::vector<Vector> cols;
  for (auto c : pivots) cols.push_back(a.column(c));
  return Matrix::from_columns(a.field(), a.rows(), cols);
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("right-hand side of the wrong length");
  Matrix augmented(a.field(), a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) augmented(r, c) = a(r, c);
    augmented(r, a.cols()) = b[r];
  }
  std::vector<std::size_t> pivots;
  const Matrix reduced = rref(augmented, &pivots);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  Vector x(a.cols(), Scalar::zero(a.field()));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = reduced(r, a.cols());
  return x;
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (!a.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<std::size_t> pivots;
  const Matrix reduced = rref(hconcat(a, Matrix::identity(a.field(), n)), &pivots);
  if (n > 0 && (pivots.size() < n || pivots[n - 1] != n - 1)) return std::nullopt;
  Matrix out(a.field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = reduced(r, n + c);
  return out;
}

Matrix intersect(const Matrix& u, const Matrix& w) {
  if (u.rows() != w.rows()) throw std::invalid_argument("subspaces of different ambient spaces");
  if (u.cols() == 0 || w.cols() == 0) return Matrix(u.field(), u.rows(), 0);
  // u s = w t  <=>  [u | -w] (s, t) = 0; the intersection is spanned by u s.
  const Matrix kernel = kernel_basis(hconcat(u, w * -Scalar::one(u.field())));
  std::vector<Vector> vectors;
  for (std::size_t c = 0; c < kernel.cols(); ++c) {
    Vector s(u.cols(), Scalar::zero(u.field()));
    for (std::size_t r = 0; r < u.cols(); ++r) s[r] = kernel(r, c);
    vectors.push_back(u * s);
  }
  return column_basis(Matrix::from_columns(u.field(), u.rows(), vectors));
}

bool in_span(const Matrix& basis, const Vector& v) { return solve(basis, v).has_value(); }

bool span_contains(const Matrix& super, const Matrix& sub) {
  for (std::size_t c = 0; c < sub.cols(); ++c)
    if (!in_span(super, sub.column(c))) return false;
  return true;
}

Matrix extend_basis(const Matrix& base, const Matrix& extra) {
  Matrix current = base;
  for (std::size_t c = 0; c < extra.cols(); ++c) {
    const Vector v = extra.column(c);
    if (!in_span(current, v))
      current = hconcat(current, Matrix::from_columns(base.field(), base.rows(), {v}));
  }
  return current;
}

}  // namespace fim
