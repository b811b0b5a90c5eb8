#include "fim/scalar.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace fim {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return (a % p) * (b % p) % p;  // p < 2^32, so the product fits
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1u) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return result;
}

std::uint64_t reduce_mpz(const mpz_class& value, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), static_cast<unsigned long>(p));
  return r.get_ui();
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 32))
    throw std::invalid_argument("modulus " + std::to_string(p) + " is too large");
  if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
  return Field(p);
}

Field Field::parse(std::string_view text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.substr(0, 3) == "fp:") {
    const std::string digits(text.substr(3));
    if (digits.empty() || digits.size() > 12 ||
        digits.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("malformed prime in field '" + std::string(text) + "'");
    return prime(std::stoull(digits));
  }
  throw std::invalid_argument("unknown field '" + std::string(text) + "' (expected q or fp:<p>)");
}

std::string Field::to_string() const {
  return is_rational() ? "q" : "fp:" + std::to_string(modulus_);
}

Scalar Scalar::from_int(const Field& field, std::int64_t value) {
  Scalar s(field);
  if (s.is_rational()) {
    s.q_ = mpq_class(static_cast<signed long>(value));
  } else {
    const auto p = static_cast<std::int64_t>(s.modulus_);
    std::int64_t r = value % p;
    if (r < 0) r += p;
    s.r_ = static_cast<std::uint64_t>(r);
  }
  return s;
}

Scalar Scalar::from_rational(const Field& field, const mpq_class& value) {
  Scalar s(field);
  if (s.is_rational()) {
    s.q_ = value;
    s.q_.canonicalize();
    return s;
  }
  const std::uint64_t den = reduce_mpz(value.get_den(), s.modulus_);
  if (den == 0) throw std::domain_error("denominator vanishes modulo " + std::to_string(s.modulus_));
  s.r_ = mul_mod(reduce_mpz(value.get_num(), s.modulus_), pow_mod(den, s.modulus_ - 2, s.modulus_),
                 s.modulus_);
  return s;
}

Scalar Scalar::parse(const Field& field, std::string_view text) {
  std::size_t start = 0;
  while (start < text.size() && std::isspace(static_cast<unsigned char>(text[start]))) ++start;
  std::size_t end = text.size();
  while (end > start && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  const std::string body(text.substr(start, end - start));
  auto valid_integer = [](const std::string& s) {
    std::size_t pos = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    return pos < s.size() && s.find_first_not_of("0123456789", pos) == std::string::npos;
  };
  const auto slash = body.find('/');
  std::string num = body.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : body.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("malformed scalar '" + body + "'");
  if (num[0] == '+') num.erase(0, 1);
  mpq_class value{mpz_class(num), mpz_class(den)};
  if (sgn(value.get_den()) == 0) throw std::domain_error("zero denominator in '" + body + "'");
  value.canonicalize();
  return from_rational(field, value);
}

void Scalar::check_same_field(const Scalar& rhs) const {
  if (modulus_ != rhs.modulus_)
    throw std::invalid_argument("scalars from different fields (" + field().to_string() + " vs " +
                                rhs.field().to_string() + ")");
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  if (is_rational()) out.q_ = -q_;
  else out.r_ = r_ == 0 ? 0 : modulus_ - r_;
  return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  check_same_field(rhs);
  if (is_rational()) q_ += rhs.q_;
  else r_ = (r_ + rhs.r_) % modulus_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  check_same_field(rhs);
  if (is_rational()) q_ -= rhs.q_;
  else r_ = (r_ + modulus_ - rhs.r_) % modulus_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  check_same_field(rhs);
  if (is_rational()) q_ *= rhs.q_;
  else r_ = mul_mod(r_, rhs.r_, modulus_);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) { return *this *= rhs.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  Scalar out = *this;
  if (is_rational()) out.q_ = 1 / q_;
  else out.r_ = pow_mod(r_, modulus_ - 2, modulus_);
  return out;
}

void Scalar::subtract_product(const Scalar& a, const Scalar& b) {
  check_same_field(a);
  check_same_field(b);
  if (is_rational()) {
    q_ -= a.q_ * b.q_;
  } else {
    r_ = (r_ + modulus_ - mul_mod(a.r_, b.r_, modulus_)) % modulus_;
  }
}

void Scalar::add_product(const Scalar& a, const Scalar& b) {
  check_same_field(a);
  check_same_field(b);
  if (is_rational()) {
    q_ += a.q_ * b.q_;
  } else {
    r_ = (r_ + mul_mod(a.r_, b.r_, modulus_)) % modulus_;
  }
}

bool Scalar::operator==(const Scalar& rhs) const {
  if (modulus_ != rhs.modulus_) return false;
  return is_rational() ? q_ == rhs.q_ : r_ == rhs.r_;
}

std::string Scalar::to_string() const {
  return is_rational() ? q_.get_str() : std::to_string(r_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace fim
