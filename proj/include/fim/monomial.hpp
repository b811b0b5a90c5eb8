#pragma once

// Elements of the free inverse monoid on one generator x (with y = x*).
//
// Every element has a unique normal form x^i y^j x^k with i <= j and k <= j.
// Products are computed by mapping into the direct product of the two
// bicyclic monoids <x,y | xy=1> and <x,y | yx=1>, multiplying there, and
// reading the triple back off.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace fim {

using Exponent = std::uint64_t;

/// Checked exponent arithmetic; throws std::overflow_error on wraparound.
Exponent checked_add(Exponent a, Exponent b);

/// A word over {x, y}. Stored as a lowercase string of 'x' and 'y'.
class Word {
 public:
  Word() = default;

  /// Parses a word, ignoring case and whitespace. Any other character
  /// raises std::invalid_argument naming its position.
  static Word parse(std::string_view text);

  /// Builds x^a y^b x^c.
  static Word xyx(Exponent a, Exponent b, Exponent c);

  const std::string& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  std::size_t count_x() const;
  std::size_t count_y() const;

  Word operator+(const Word& rhs) const;

  auto operator<=>(const Word&) const = default;

 private:
  explicit Word(std::string letters) : letters_(std::move(letters)) {}
  std::string letters_;
};

/// Normal forms y^a x^b (first factor, xy = 1) and x^c y^d (second factor,
/// yx = 1).
struct BicyclicPair {
  Exponent a = 0;
  Exponent b = 0;
  Exponent c = 0;
  Exponent d = 0;

  auto operator<=>(const BicyclicPair&) const = default;
};

BicyclicPair bicyclic_multiply(const BicyclicPair& lhs, const BicyclicPair& rhs);

class Monomial {
 public:
  /// The identity element (0,0,0).
  constexpr Monomial() = default;

  /// Normalizes the word x^i y^j x^k, so out-of-range triples are accepted.
  static Monomial from_exponents(Exponent i, Exponent j, Exponent k);

  static Monomial identity() { return Monomial(); }
  static Monomial x() { return Monomial(1, 1, 1); }
  static Monomial y() { return Monomial(0, 1, 0); }
  static Monomial x_power(Exponent m) { return Monomial(m, m, m); }
  static Monomial y_power(Exponent m) { return Monomial(0, m, 0); }

  /// Parses "(i,j,k)" (whitespace allowed) or a word over {x,y}.
  static Monomial parse(std::string_view text);

  Exponent i() const { return i_; }
  Exponent j() const { return j_; }
  Exponent k() const { return k_; }

  BicyclicPair embed() const;

  /// Inverse of embed on its image. Throws std::logic_error if the pair is
  /// not of the form produced by embed.
  static Monomial from_pair(const BicyclicPair& pair);

  Monomial operator*(const Monomial& rhs) const;

  /// The involution x <-> y: (j-k, j, j-i).
  Monomial star() const;

  bool is_idempotent() const;

  /// Image under the homomorphism to Z sending x to 1 and y to -1.
  std::int64_t degree() const;

  /// The word x^i y^j x^k.
  Word word() const;

  /// Serialized as "(i,j,k)".
  std::string to_string() const;

  /// Display order: lexicographic on (j, i, k).
  friend std::strong_ordering operator<=>(const Monomial& lhs, const Monomial& rhs) {
    if (auto c = lhs.j_ <=> rhs.j_; c != 0) return c;
    if (auto c = lhs.i_ <=> rhs.i_; c != 0) return c;
    return lhs.k_ <=> rhs.k_;
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  constexpr Monomial(Exponent i, Exponent j, Exponent k) : i_(i), j_(j), k_(k) {}

  Exponent i_ = 0;
  Exponent j_ = 0;
  Exponent k_ = 0;
};

/// Folds the product over the letters of w.
Monomial reduce_word(const Word& w);

std::ostream& operator<<(std::ostream& os, const Monomial& m);
std::ostream& operator<<(std::ostream& os, const Word& w);

}  // namespace fim
