#pragma once

// The monoid algebra kF of the one-generator free inverse monoid over an
// exact field k: finitely supported linear combinations of normal forms.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>

#include "fim/monomial.hpp"
#include "fim/scalar.hpp"

namespace fim {

class AlgebraElement {
 public:
  using Terms = std::map<Monomial, Scalar>;

  /// The zero element over the given field.
  explicit AlgebraElement(const Field& field = Field::rationals()) : field_(field) {}

  static AlgebraElement monomial(const Field& field, const Monomial& m);
  static AlgebraElement monomial(const Monomial& m, const Scalar& coefficient);
  static AlgebraElement constant(const Scalar& value);
  static AlgebraElement one(const Field& field) { return monomial(field, Monomial::identity()); }
  static AlgebraElement x(const Field& field) { return monomial(field, Monomial::x()); }
  static AlgebraElement y(const Field& field) { return monomial(field, Monomial::y()); }

  /// Parses sums such as "3/2*(1,2,2) - (0,0,0)" or "1 - xy + 2*yx". A term is
  /// an optional coefficient, an optional '*', and an optional monomial given
  /// as "(i,j,k)" or as a word; a bare coefficient means that multiple of 1.
  static AlgebraElement parse(const Field& field, std::string_view text);

  const Field& field() const { return field_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const Monomial& m) const;

  /// Largest j among the supporting monomials (0 for the zero element).
  Exponent max_j() const;

  AlgebraElement operator-() const;
  AlgebraElement& operator+=(const AlgebraElement& rhs);
  AlgebraElement& operator-=(const AlgebraElement& rhs);
  AlgebraElement& operator*=(const Scalar& rhs);

  friend AlgebraElement operator+(AlgebraElement lhs, const AlgebraElement& rhs) { return lhs += rhs; }
  friend AlgebraElement operator-(AlgebraElement lhs, const AlgebraElement& rhs) { return lhs -= rhs; }
  friend AlgebraElement operator*(AlgebraElement lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend AlgebraElement operator*(const Scalar& lhs, AlgebraElement rhs) { return rhs *= lhs; }
  friend AlgebraElement operator*(const AlgebraElement& lhs, const AlgebraElement& rhs);

  bool operator==(const AlgebraElement& rhs) const {
    return field_ == rhs.field_ && terms_ == rhs.terms_;
  }

  /// Terms in (j, i, k) order, e.g. "3/2*(1,2,2) - (0,0,0)"; "0" when empty.
  std::string to_string() const;

 private:
  void check_field(const AlgebraElement& rhs) const;
  void add_term(const Monomial& m, const Scalar& c);

  Field field_;
  Terms terms_;
};

AlgebraElement pow(const AlgebraElement& a, std::size_t exponent);

/// The word's image in kF.
AlgebraElement word_element(const Field& field, const Word& w);

/// l_i = x^{i-1} y^{i-1} - x^i y^i, for i >= 1.
AlgebraElement ell(const Field& field, Exponent i);

/// r_i = y^{i-1} x^{i-1} - y^i x^i, for i >= 1.
AlgebraElement rr(const Field& field, Exponent i);

/// p_n = r_n l_1 + r_{n-1} l_2 + ... + r_1 l_n, for n >= 1.
AlgebraElement central_idempotent(const Field& field, Exponent n);

/// y' = y + x^{m-1} l_1 r_m, for m >= 1.
AlgebraElement y_prime(const Field& field, Exponent m);

/// Homogeneous components under deg(x) = 1, deg(y) = -1.
std::map<std::int64_t, AlgebraElement> degree_split(const AlgebraElement& a);

std::ostream& operator<<(std::ostream& os, const AlgebraElement& a);

}  // namespace fim
