#pragma once

// The action of kF on V = V_1 + V_2 + ..., where V_n has basis
// b_{n,1}, ..., b_{n,n}, x shifts b_{n,h} to b_{n,h+1} (killing b_{n,n}) and
// y shifts back (killing b_{n,1}). The same index set plus one extra vector
// b_+ carries the operators of the counterexample gallery.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fim/algebra.hpp"
#include "fim/matrix.hpp"

namespace fim {

struct BasisIndex {
  bool plus = false;  // first, so b_+ sorts after every b_{n,h}
  Exponent n = 0;
  Exponent h = 0;

  /// b_{n,h}; throws std::invalid_argument unless 1 <= h <= n.
  static BasisIndex standard(Exponent n, Exponent h);
  static BasisIndex extra() { return BasisIndex{true, 0, 0}; }

  std::string to_string() const;
  auto operator<=>(const BasisIndex&) const = default;
};

class SupportedVector {
 public:
  using Coords = std::map<BasisIndex, Scalar>;

  explicit SupportedVector(const Field& field = Field::rationals()) : field_(field) {}
  static SupportedVector basis(const Field& field, const BasisIndex& index);

  const Field& field() const { return field_; }
  const Coords& coords() const { return coords_; }
  bool is_zero() const { return coords_.empty(); }
  bool has_extra() const;

  void add(const BasisIndex& index, const Scalar& c);
  SupportedVector& operator+=(const SupportedVector& rhs);
  SupportedVector& operator*=(const Scalar& rhs);
  friend SupportedVector operator+(SupportedVector lhs, const SupportedVector& rhs) { return lhs += rhs; }
  friend SupportedVector operator*(const Scalar& lhs, SupportedVector rhs) { return rhs *= lhs; }

  bool operator==(const SupportedVector& rhs) const {
    return field_ == rhs.field_ && coords_ == rhs.coords_;
  }

  /// E.g. "b_{2,2}", "2*b_{1,1} - b_+", "0".
  std::string to_string() const;

 private:
  Field field_;
  Coords coords_;
};

/// Image of b_{n,h} under the normal form x^i y^j x^k, if nonzero.
std::optional<BasisIndex> act(const Monomial& m, const BasisIndex& index);

/// Throws std::invalid_argument if v involves b_+.
SupportedVector act(const AlgebraElement& a, const SupportedVector& v);

/// Operators given by formulas on basis vectors, closed under sums, scalar
/// multiples and composition.
class FormulaOperator {
 public:
  enum class Space { kStandard, kExtended };
  enum class Named { kXStd, kYStd, kXCeg, kYCeg, kU, kZXu };

  static FormulaOperator named(Named which);
  static FormulaOperator x_std() { return named(Named::kXStd); }
  static FormulaOperator y_std() { return named(Named::kYStd); }
  static FormulaOperator x_ceg() { return named(Named::kXCeg); }
  static FormulaOperator y_ceg() { return named(Named::kYCeg); }
  static FormulaOperator u() { return named(Named::kU); }
  static FormulaOperator z_xu() { return named(Named::kZXu); }

  /// Catalog lookup by name ("x_std", "u", ...); throws std::invalid_argument.
  static FormulaOperator parse(const std::string& name);

  /// Throws std::invalid_argument if the operands live on different spaces.
  static FormulaOperator sum(const FormulaOperator& lhs, const FormulaOperator& rhs);
  static FormulaOperator scaled(const Scalar& c, const FormulaOperator& op);
  /// outer ∘ inner.
  static FormulaOperator compose(const FormulaOperator& outer, const FormulaOperator& inner);

  Space space() const;
  std::string to_string() const;

  /// Throws std::invalid_argument if v has b_+ and the operator is standard.
  SupportedVector apply(const SupportedVector& v) const;

  struct Node;

 private:
  explicit FormulaOperator(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Evaluates a word in x and y on v, rightmost letter first.
SupportedVector apply_word(const FormulaOperator& x, const FormulaOperator& y, const std::string& word,
                           const SupportedVector& v);

/// b_{n,h} for n <= max_n in (n, h) order, then b_+ if requested.
std::vector<BasisIndex> basis_indices(Exponent max_n, bool with_extra);

struct OperatorRelationFailure {
  int family = 0;
  std::size_t j = 0;
  BasisIndex index;
  SupportedVector lhs;
  SupportedVector rhs;
};

/// Scans j = 1..jmax, the relation x y^j x^j = y^{j-1} x^j before
/// y^j x^j y = y^j x^{j-1}, then the indices in order; returns the first
/// disagreement.
std::optional<OperatorRelationFailure> find_relation_failure(const FormulaOperator& x,
                                                             const FormulaOperator& y, std::size_t jmax,
                                                             const std::vector<BasisIndex>& indices);

/// First index where the two words disagree.
std::optional<BasisIndex> first_disagreement(const FormulaOperator& x, const FormulaOperator& y,
                                             const std::string& lhs_word, const std::string& rhs_word,
                                             const std::vector<BasisIndex>& indices);

/// dim(V_1 + ... + V_N) = N(N+1)/2.
std::size_t truncation_dim(Exponent n_max);
/// Position of b_{n,h} in the (n, h) ordered basis.
std::size_t truncation_index(Exponent n, Exponent h);

Matrix truncation_matrix(const AlgebraElement& a, Exponent n_max);

/// True iff the truncation matrices of the elements are linearly independent.
bool operators_independent(const std::vector<AlgebraElement>& elements, Exponent n_max);
bool independence_check(const std::vector<Monomial>& monomials, const Field& field, Exponent n_max);

/// Least i >= 1 with ker(X) ∩ im(X^i) = ker(X) ∩ im(X^{i-1}); none only for
/// the empty matrix.
std::optional<std::size_t> faithfulness_first_failure(const Matrix& x);

struct ComplementReport {
  std::size_t i = 0;
  std::size_t n_max = 0;
  // r_i: image inside ker(x^i), meeting ker(x^{i-1}) trivially, dimensions adding up.
  bool r_image_inside = false;
  bool r_meets_trivially = false;
  std::size_t r_rank = 0;
  std::size_t ker_lower = 0;  // dim ker(x^{i-1})
  std::size_t ker_upper = 0;  // dim ker(x^i)
  // l_i: image inside im(x^{i-1}), meeting im(x^i) trivially, dimensions adding up.
  bool l_image_inside = false;
  bool l_meets_trivially = false;
  std::size_t l_rank = 0;
  std::size_t im_lower = 0;  // dim im(x^i)
  std::size_t im_upper = 0;  // dim im(x^{i-1})

  bool holds() const {
    return r_image_inside && r_meets_trivially && r_rank + ker_lower == ker_upper && l_image_inside &&
           l_meets_trivially && l_rank + im_lower == im_upper;
  }
};

ComplementReport lxr_image_check(std::size_t i, Exponent n_max, const Field& field = Field::rationals());

}  // namespace fim
