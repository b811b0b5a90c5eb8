#include "fim/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <ostream>
#include <stdexcept>

namespace fim {

namespace {

class ExpressionParser {
 public:
  ExpressionParser(const Field& field, std::string_view text) : field_(field), text_(text) {}

  AlgebraElement parse() {
    AlgebraElement result(field_);
    skip_space();
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
    }
    while (true) {
      AlgebraElement term = parse_term();
      result += negative ? -term : term;
      skip_space();
      if (pos_ == text_.size()) break;
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
      negative = peek() == '-';
      ++pos_;
    }
    return result;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument(what + " at position " + std::to_string(pos_) + " in '" +
                                std::string(text_) + "'");
  }

  static bool is_letter(char c) { return c == 'x' || c == 'y' || c == 'X' || c == 'Y'; }

  AlgebraElement parse_term() {
    skip_space();
    std::optional<Scalar> coefficient;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/') ++pos_;
      try {
        coefficient = Scalar::parse(field_, text_.substr(start, pos_ - start));
      } catch (const std::invalid_argument&) {
        pos_ = start;
        fail("malformed coefficient");
      }
      skip_space();
      if (peek() == '*') {
        ++pos_;
        skip_space();
      }
    }
    std::optional<Monomial> monomial;
    if (peek() == '(') {
      const std::size_t start = pos_;
      const auto close = text_.find(')', pos_);
      if (close == std::string_view::npos) fail("unterminated monomial");
      pos_ = close + 1;
      try {
        monomial = Monomial::parse(text_.substr(start, pos_ - start));
      } catch (const std::exception& e) {
        pos_ = start;
        fail(std::string("malformed monomial (") + e.what() + ")");
      }
    } else if (is_letter(peek())) {
      const std::size_t start = pos_;
      while (is_letter(peek())) ++pos_;
      monomial = reduce_word(Word::parse(text_.substr(start, pos_ - start)));
    }
    if (!coefficient && !monomial) fail("expected a coefficient or a monomial");
    const Scalar c = coefficient.value_or(Scalar::one(field_));
    return AlgebraElement::monomial(monomial.value_or(Monomial::identity()), c);
  }

  Field field_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

AlgebraElement AlgebraElement::monomial(const Field& field, const Monomial& m) {
  return monomial(m, Scalar::one(field));
}

AlgebraElement AlgebraElement::monomial(const Monomial& m, const Scalar& coefficient) {
  AlgebraElement a(coefficient.field());
  a.add_term(m, coefficient);
  return a;
}

AlgebraElement AlgebraElement::constant(const Scalar& value) {
  return monomial(Monomial::identity(), value);
}

AlgebraElement AlgebraElement::parse(const Field& field, std::string_view text) {
  return ExpressionParser(field, text).parse();
}

Scalar AlgebraElement::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

Exponent AlgebraElement::max_j() const {
  Exponent j = 0;
  for (const auto& [m, c] : terms_) j = std::max(j, m.j());
  return j;
}

void AlgebraElement::check_field(const AlgebraElement& rhs) const {
  if (!(field_ == rhs.field_))
    throw std::invalid_argument("algebra elements over different fields (" + field_.to_string() +
                                " vs " + rhs.field_.to_string() + ")");
}

void AlgebraElement::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& rhs) {
  check_field(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& rhs) {
  check_field(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Scalar& rhs) {
  if (!(rhs.field() == field_)) throw std::invalid_argument("scalar from a different field");
  if (rhs.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= rhs;
  return *this;
}

AlgebraElement operator*(const AlgebraElement& lhs, const AlgebraElement& rhs) {
  lhs.check_field(rhs);
  AlgebraElement out(lhs.field_);
  for (const auto& [m1, c1] : lhs.terms_)
    for (const auto& [m2, c2] : rhs.terms_) out.add_term(m1 * m2, c1 * c2);
  return out;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Scalar magnitude = c;
    bool negative = false;
    if (c.is_rational() && sgn(c.rational()) < 0) {
      negative = true;
      magnitude = -c;
    }
    if (first) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    if (!magnitude.is_one()) out += magnitude.to_string() + "*";
    out += m.to_string();
    first = false;
  }
  return out;
}

AlgebraElement pow(const AlgebraElement& a, std::size_t exponent) {
  AlgebraElement result = AlgebraElement::one(a.field());
  for (std::size_t e = 0; e < exponent; ++e) result = result * a;
  return result;
}

AlgebraElement word_element(const Field& field, const Word& w) {
  return AlgebraElement::monomial(field, reduce_word(w));
}

AlgebraElement ell(const Field& field, Exponent i) {
  if (i == 0) throw std::invalid_argument("l_i is defined for i >= 1");
  return AlgebraElement::monomial(field, Monomial::from_exponents(i - 1, i - 1, 0)) -
         AlgebraElement::monomial(field, Monomial::from_exponents(i, i, 0));
}

AlgebraElement rr(const Field& field, Exponent i) {
  if (i == 0) throw std::invalid_argument("r_i is defined for i >= 1");
  return AlgebraElement::monomial(field, Monomial::from_exponents(0, i - 1, i - 1)) -
         AlgebraElement::monomial(field, Monomial::from_exponents(0, i, i));
}

AlgebraElement central_idempotent(const Field& field, Exponent n) {
  if (n == 0) throw std::invalid_argument("p_n is defined for n >= 1");
  AlgebraElement sum(field);
  for (Exponent i = 1; i <= n; ++i) sum += rr(field, n + 1 - i) * ell(field, i);
  return sum;
}

AlgebraElement y_prime(const Field& field, Exponent m) {
  if (m == 0) throw std::invalid_argument("y' is defined for m >= 1");
  return AlgebraElement::y(field) +
         AlgebraElement::monomial(field, Monomial::x_power(m - 1)) * ell(field, 1) * rr(field, m);
}

std::map<std::int64_t, AlgebraElement> degree_split(const AlgebraElement& a) {
  std::map<std::int64_t, AlgebraElement> parts;
  for (const auto& [m, c] : a.terms()) {
    auto [it, inserted] = parts.try_emplace(m.degree(), a.field());
    it->second += AlgebraElement::monomial(m, c);
  }
  return parts;
}

std::ostream& operator<<(std::ostream& os, const AlgebraElement& a) { return os << a.to_string(); }

}  // namespace fim
