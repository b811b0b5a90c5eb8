#pragma once

// Strong inner inverses of square matrices. The space splits as
// im(A^N) + ker(A^N); A is invertible on the first summand, and the second
// is a direct sum of chains b, Ab, ..., A^{m-1}b with A^m b = 0. The inverse
// undoes A on the first summand and shifts each chain backwards.

#include <cstddef>
#include <optional>
#include <vector>

#include "fim/matrix.hpp"

namespace fim {

struct FittingSplit {
  /// Least N with rank(A^N) = rank(A^{N+1}).
  std::size_t exponent = 0;
  Matrix image_basis;   // columns span im(A^N)
  Matrix kernel_basis;  // columns span ker(A^N)
};

FittingSplit fitting_split(const Matrix& a);

struct BasicChain {
  Vector seed;
  /// seed, A seed, ..., A^{m-1} seed; A kills the last one.
  std::vector<Vector> vectors;

  std::size_t length() const { return vectors.size(); }
};

/// Chains whose vectors jointly form a basis of ker(A^N). Longest chains come
/// first; the seeds of length i+1 lift a basis of ker(A) ∩ im(A^i) taken
/// modulo ker(A) ∩ im(A^{i+1}).
std::vector<BasicChain> basic_chains(const Matrix& a);

Matrix strong_inner_inverse(const Matrix& a);

/// Which of the two relations failed: 1 for x y^j x^j = y^{j-1} x^j,
/// 2 for y^j x^j y = y^j x^{j-1}.
struct RelationFailure {
  int family = 0;
  std::size_t j = 0;
  bool operator==(const RelationFailure&) const = default;
};

/// Checks both relations for 1 <= j <= jmax, j ascending and the first
/// relation before the second. Returns the first failure.
std::optional<RelationFailure> verify_strong(const Matrix& a, const Matrix& y, std::size_t jmax);

/// A Y A = A, Y A Y = Y, and (AY)(YA) = (YA)(AY).
bool is_inverse_pair(const Matrix& a, const Matrix& y);

/// (1 + A)^{-1} Y (1 + A). Throws std::invalid_argument if 1 + A is singular.
Matrix conjugate_by_one_plus(const Matrix& a, const Matrix& y);

}  // namespace fim
