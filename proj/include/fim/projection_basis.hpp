#pragma once

// The basis of kF built from powers of x or y and the projections l_i, r_i:
//
//   y^m, 1, x^m
//   y^m l_i (i > m),   l_i,   x^m l_i
//   y^m r_i,           r_i,   x^m r_i (i > m)
//   y^m r_i l_j (j > m), r_i l_j, x^m r_i l_j (i > m)
//
// with every index >= 1. Conversion from normal-form coordinates solves an
// exact linear system one degree at a time (every basis term is homogeneous).

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fim/algebra.hpp"
#include "fim/matrix.hpp"

namespace fim {

struct ProjectionBasisTerm {
  enum class Kind { kPower, kEll, kR, kREll };

  Kind kind = Kind::kPower;
  /// Leading factor: -m for y^m, 0 for none, +m for x^m.
  std::int64_t shift = 0;
  /// Index of l (kEll) or r (kR, kREll).
  Exponent i = 0;
  /// Index of l in r_i l_j (kREll only).
  Exponent j = 0;

  static ProjectionBasisTerm power(std::int64_t shift) { return {Kind::kPower, shift, 0, 0}; }
  static ProjectionBasisTerm ell(std::int64_t shift, Exponent i) { return {Kind::kEll, shift, i, 0}; }
  static ProjectionBasisTerm r(std::int64_t shift, Exponent i) { return {Kind::kR, shift, i, 0}; }
  static ProjectionBasisTerm r_ell(std::int64_t shift, Exponent i, Exponent j) {
    return {Kind::kREll, shift, i, j};
  }

  bool satisfies_side_conditions() const;

  /// Largest of m and the projection indices.
  Exponent parameter_bound() const;

  std::int64_t degree() const { return shift; }

  /// E.g. "1", "x^2", "y l_3", "r_2 l_1", "x^2 r_3 l_1".
  std::string to_string() const;

  auto operator<=>(const ProjectionBasisTerm&) const = default;
};

/// Multiplies out the term into normal-form monomials. Throws
/// std::invalid_argument if a side condition fails.
AlgebraElement expand(const Field& field, const ProjectionBasisTerm& term);

/// All valid terms whose parameters (m and the projection indices) are <= bound.
std::vector<ProjectionBasisTerm> projection_terms(Exponent bound);

using ProjectionCoordinates = std::vector<std::pair<Scalar, ProjectionBasisTerm>>;

AlgebraElement from_projection_basis(const Field& field, const ProjectionCoordinates& coords);

/// Precomputed per-degree solver for elements supported on monomials with
/// j < bound. Immutable after construction.
class ProjectionBasisConverter {
 public:
  ProjectionBasisConverter(const Field& field, Exponent bound);

  const Field& field() const { return field_; }
  Exponent bound() const { return bound_; }

  /// Exact coordinates, sorted by term, zeros omitted. Throws
  /// std::invalid_argument if a has monomials with j >= bound, and
  /// std::logic_error if the system is inconsistent.
  ProjectionCoordinates coordinates(const AlgebraElement& a) const;

 private:
  struct DegreeBlock {
    std::vector<ProjectionBasisTerm> terms;
    std::map<Monomial, std::size_t> row_of;
    Matrix system;          // rows: monomials, columns: terms
    std::vector<std::size_t> pivot_rows;
    Matrix pivot_inverse;   // inverse of the pivot-row submatrix
  };

  Field field_;
  Exponent bound_;
  std::map<std::int64_t, DegreeBlock> blocks_;
};

/// Coordinates of a in the projection basis, using terms with parameters up
/// to max_j(a) + 1.
ProjectionCoordinates to_projection_basis(const AlgebraElement& a);

std::string format_coordinates(const ProjectionCoordinates& coords);

}  // namespace fim
