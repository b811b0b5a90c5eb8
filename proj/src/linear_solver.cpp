#include "fim/linear_solver.hpp"

#include <stdexcept>

namespace fim {

FittingSplit fitting_split(const Matrix& a) {
  if (!a.is_square()) throw std::invalid_argument("fitting_split needs a square matrix");
  FittingSplit split;
  Matrix current = Matrix::identity(a.field(), a.rows());
  std::size_t current_rank = a.rows();
  while (true) {
    const Matrix next = current * a;
    const std::size_t next_rank = rank(next);
    if (next_rank == current_rank) break;
    current = next;
    current_rank = next_rank;
    ++split.exponent;
  }
  split.image_basis = column_basis(current);
  split.kernel_basis = kernel_basis(current);
  return split;
}

std::vector<BasicChain> basic_chains(const Matrix& a) {
  const std::size_t n = fitting_split(a).exponent;
  if (n == 0) return {};

  // levels[i] = basis of ker(A) ∩ im(A^i), for i = 0, ..., n-1.
  std::vector<Matrix> levels;
  Matrix power_i = Matrix::identity(a.field(), a.rows());
  for (std::size_t i = 0; i < n; ++i) {
    const Matrix image = column_basis(power_i);
    levels.push_back(image.cols() == 0 ? image : image * kernel_basis(a * image));
    power_i = power_i * a;
  }

  std::vector<BasicChain> chains;
  Matrix chosen(a.field(), a.rows(), 0);
  for (std::size_t level = n; level-- > 0;) {
    const Matrix extended = extend_basis(chosen, levels[level]);
    const Matrix lift_map = power(a, level);
    for (std::size_t c = chosen.cols(); c < extended.cols(); ++c) {
      const auto seed = solve(lift_map, extended.column(c));
      if (!seed) throw std::logic_error("kernel vector in im(A^i) has no preimage under A^i");
      BasicChain chain{*seed, {*seed}};
      for (std::size_t h = 0; h < level; ++h) chain.vectors.push_back(a * chain.vectors.back());
      chains.push_back(std::move(chain));
    }
    chosen = extended;
  }
  return chains;
}

Matrix strong_inner_inverse(const Matrix& a) {
  const FittingSplit split = fitting_split(a);
  const std::vector<BasicChain> chains = basic_chains(a);
  const Field& field = a.field();
  const std::size_t dim = a.rows();

  std::vector<Vector> basis = split.image_basis.columns();
  const std::size_t image_dim = basis.size();
  for (const auto& chain : chains)
    basis.insert(basis.end(), chain.vectors.begin(), chain.vectors.end());
  const Matrix change = Matrix::from_columns(field, dim, basis);
  const auto change_inverse = inverse(change);
  if (!change_inverse) throw std::logic_error("Fitting image and chains do not form a basis");

  Matrix block(field, dim, dim);
  if (image_dim > 0) {
    // Coordinates of A restricted to the image, then its inverse.
    Matrix restricted(field, image_dim, image_dim);
    for (std::size_t c = 0; c < image_dim; ++c) {
      const auto coords = solve(split.image_basis, a * basis[c]);
      if (!coords) throw std::logic_error("Fitting image is not A-invariant");
      for (std::size_t r = 0; r < image_dim; ++r) restricted(r, c) = (*coords)[r];
    }
    const auto restricted_inverse = inverse(restricted);
    if (!restricted_inverse) throw std::logic_error("A is singular on its Fitting image");
    for (std::size_t r = 0; r < image_dim; ++r)
      for (std::size_t c = 0; c < image_dim; ++c) block(r, c) = (*restricted_inverse)(r, c);
  }
  std::size_t offset = image_dim;
  for (const auto& chain : chains) {
    for (std::size_t h = 1; h < chain.length(); ++h)
      block(offset + h - 1, offset + h) = Scalar::one(field);
    offset += chain.length();
  }
  return change * block * *change_inverse;
}

std::optional<RelationFailure> verify_strong(const Matrix& a, const Matrix& y, std::size_t jmax) {
  if (!a.is_square() || !(a.rows() == y.rows() && a.cols() == y.cols()))
    throw std::invalid_argument("verify_strong needs square matrices of equal size");
  Matrix a_pow = Matrix::identity(a.field(), a.rows());  // A^{j-1}
  Matrix y_pow = a_pow;                                  // Y^{j-1}
  for (std::size_t j = 1; j <= jmax; ++j) {
    const Matrix a_next = a_pow * a;
    const Matrix y_next = y_pow * y;
    if (a * y_next * a_next != y_pow * a_next) return RelationFailure{1, j};
    const Matrix yx = y_next * a_next;
    if (yx * y != y_next * a_pow) return RelationFailure{2, j};
    a_pow = a_next;
    y_pow = y_next;
  }
  return std::nullopt;
}

bool is_inverse_pair(const Matrix& a, const Matrix& y) {
  const Matrix ay = a * y;
  const Matrix ya = y * a;
  return ay * a == a && ya * y == y && ay * ya == ya * ay;
}

Matrix conjugate_by_one_plus(const Matrix& a, const Matrix& y) {
  const Matrix one_plus = Matrix::identity(a.field(), a.rows()) + a;
  const auto inv = inverse(one_plus);
  if (!inv) throw std::invalid_argument("1 + A is singular");
  return *inv * y * one_plus;
}

}  // namespace fim
