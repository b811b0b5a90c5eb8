#pragma once

// Exact field elements: GMP rationals or residues modulo a prime.

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace fim {

class Field {
 public:
  /// The rationals.
  Field() = default;

  static Field rationals() { return Field(); }

  /// Residues modulo p. Throws std::invalid_argument unless p is a prime
  /// below 2^32.
  static Field prime(std::uint64_t p);

  /// "q" or "fp:<p>".
  static Field parse(std::string_view text);

  bool is_rational() const { return modulus_ == 0; }
  std::uint64_t modulus() const { return modulus_; }

  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class Scalar;
  explicit Field(std::uint64_t modulus) : modulus_(modulus) {}
  std::uint64_t modulus_ = 0;
};

bool is_prime(std::uint64_t n);

class Scalar {
 public:
  /// Rational zero.
  Scalar() = default;

  static Scalar zero(const Field& field) { return Scalar(field); }
  static Scalar one(const Field& field) { return from_int(field, 1); }
  static Scalar from_int(const Field& field, std::int64_t value);
  static Scalar from_rational(const Field& field, const mpq_class& value);

  /// Parses "a" or "a/b" with optional sign. Division by a multiple of p
  /// in F_p raises std::domain_error.
  static Scalar parse(const Field& field, std::string_view text);

  Field field() const { return Field(modulus_); }
  bool is_rational() const { return modulus_ == 0; }
  bool is_zero() const { return is_rational() ? sgn(q_) == 0 : r_ == 0; }
  bool is_one() const { return is_rational() ? q_ == 1 : r_ == 1; }

  /// Valid only over the rationals.
  const mpq_class& rational() const { return q_; }
  /// Valid only over F_p.
  std::uint64_t residue() const { return r_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  Scalar inverse() const;

  /// lhs -= a * b, the inner step of elimination.
  void subtract_product(const Scalar& a, const Scalar& b);
  /// lhs += a * b.
  void add_product(const Scalar& a, const Scalar& b);

  bool operator==(const Scalar& rhs) const;

  /// "a" or "a/b" over Q, the least non-negative residue over F_p.
  std::string to_string() const;

 private:
  explicit Scalar(const Field& field) : modulus_(field.modulus()) {}
  void check_same_field(const Scalar& rhs) const;

  std::uint64_t modulus_ = 0;
  mpq_class q_;
  std::uint64_t r_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace fim
