#include "fim/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace fim {

namespace {

// Truncated subtraction.
Exponent monus(Exponent a, Exponent b) { return a > b ? a - b : 0; }

std::size_t skip_space(std::string_view text, std::size_t pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  return pos;
}

Exponent parse_exponent(std::string_view text, std::size_t& pos) {
  pos = skip_space(text, pos);
  if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
    throw std::invalid_argument("expected a non-negative integer at position " +
                                std::to_string(pos));
  Exponent value = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    Exponent digit = static_cast<Exponent>(text[pos] - '0');
    if (value > (std::numeric_limits<Exponent>::max() - digit) / 10)
      throw std::overflow_error("exponent too large at position " + std::to_string(pos));
    value = value * 10 + digit;
    ++pos;
  }
  return value;
}

void expect_char(std::string_view text, std::size_t& pos, char c) {
  pos = skip_space(text, pos);
  if (pos >= text.size() || text[pos] != c)
    throw std::invalid_argument(std::string("expected '") + c + "' at position " +
                                std::to_string(pos));
  ++pos;
}

}  // namespace

Exponent checked_add(Exponent a, Exponent b) {
  if (a > std::numeric_limits<Exponent>::max() - b)
    throw std::overflow_error("exponent overflow");
  return a + b;
}

Word Word::parse(std::string_view text) {
  std::string letters;
  letters.reserve(text.size());
  for (std::size_t pos = 0; pos < text.size(); ++pos) {
    const auto ch = static_cast<unsigned char>(text[pos]);
    if (std::isspace(ch)) continue;
    const char lower = static_cast<char>(std::tolower(ch));
    if (lower != 'x' && lower != 'y')
      throw std::invalid_argument("unexpected character '" + std::string(1, text[pos]) +
                                  "' at position " + std::to_string(pos) +
                                  " (words use only x and y)");
    letters.push_back(lower);
  }
  return Word(std::move(letters));
}

Word Word::xyx(Exponent a, Exponent b, Exponent c) {
  std::string letters;
  letters.append(a, 'x');
  letters.append(b, 'y');
  letters.append(c, 'x');
  return Word(std::move(letters));
}

std::size_t Word::count_x() const {
  return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), 'x'));
}

std::size_t Word::count_y() const { return letters_.size() - count_x(); }

Word Word::operator+(const Word& rhs) const { return Word(letters_ + rhs.letters_); }

BicyclicPair bicyclic_multiply(const BicyclicPair& lhs, const BicyclicPair& rhs) {
  // (y^a x^b)(y^a' x^b') = y^{a + (a'-b)} x^{b' + (b-a')} with xy = 1, and the
  // mirror rule for x^c y^d with yx = 1.
  BicyclicPair out;
  out.a = checked_add(lhs.a, monus(rhs.a, lhs.b));
  out.b = checked_add(rhs.b, monus(lhs.b, rhs.a));
  out.c = checked_add(lhs.c, monus(rhs.c, lhs.d));
  out.d = checked_add(rhs.d, monus(lhs.d, rhs.c));
  return out;
}

Monomial Monomial::from_exponents(Exponent i, Exponent j, Exponent k) {
  if (i <= j && k <= j) return Monomial(i, j, k);
  return x_power(i) * y_power(j) * x_power(k);
}

Monomial Monomial::parse(std::string_view text) {
  const std::size_t start = skip_space(text, 0);
  if (start < text.size() && text[start] == '(') {
    std::size_t pos = start + 1;
    const Exponent i = parse_exponent(text, pos);
    expect_char(text, pos, ',');
    const Exponent j = parse_exponent(text, pos);
    expect_char(text, pos, ',');
    const Exponent k = parse_exponent(text, pos);
    expect_char(text, pos, ')');
    pos = skip_space(text, pos);
    if (pos != text.size())
      throw std::invalid_argument("trailing characters at position " + std::to_string(pos));
    return from_exponents(i, j, k);
  }
  return reduce_word(Word::parse(text));
}

BicyclicPair Monomial::embed() const { return {j_ - i_, k_, i_, j_ - k_}; }

Monomial Monomial::from_pair(const BicyclicPair& pair) {
  const Exponent j = checked_add(pair.a, pair.c);
  if (j != checked_add(pair.b, pair.d))
    throw std::logic_error("bicyclic pair outside the image of the embedding");
  return Monomial(pair.c, j, pair.b);
}

Monomial Monomial::operator*(const Monomial& rhs) const {
  return from_pair(bicyclic_multiply(embed(), rhs.embed()));
}

Monomial Monomial::star() const { return Monomial(j_ - k_, j_, j_ - i_); }

bool Monomial::is_idempotent() const { return *this * *this == *this; }

std::int64_t Monomial::degree() const {
  constexpr auto kMax = static_cast<Exponent>(std::numeric_limits<std::int64_t>::max());
  const Exponent up = checked_add(i_, k_);
  if (up > kMax || j_ > kMax) throw std::overflow_error("degree out of range");
  return static_cast<std::int64_t>(up) - static_cast<std::int64_t>(j_);
}

Word Monomial::word() const { return Word::xyx(i_, j_, k_); }

std::string Monomial::to_string() const {
  return "(" + std::to_string(i_) + "," + std::to_string(j_) + "," + std::to_string(k_) + ")";
}

Monomial reduce_word(const Word& w) {
  Monomial result;
  for (char letter : w.letters()) result = result * (letter == 'x' ? Monomial::x() : Monomial::y());
  return result;
}

std::ostream& operator<<(std::ostream& os, const Monomial& m) { return os << m.to_string(); }

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << '"' << w.letters() << '"'; }

}  // namespace fim
