#include <gtest/gtest.h>

#include <stdexcept>

#include "fim/algebra.hpp"

namespace {

using fim::AlgebraElement;
using fim::Exponent;
using fim::Field;
using fim::Monomial;

const Field Q = Field::rationals();
const Field F5 = Field::prime(5);

AlgebraElement P(const std::string& text, const Field& f = Q) { return AlgebraElement::parse(f, text); }
AlgebraElement X(const Field& f = Q) { return AlgebraElement::x(f); }
AlgebraElement Y(const Field& f = Q) { return AlgebraElement::y(f); }
AlgebraElement one(const Field& f = Q) { return AlgebraElement::one(f); }

AlgebraElement ell0(const Field& f, Exponent i) { return i == 0 ? AlgebraElement(f) : fim::ell(f, i); }
AlgebraElement rr0(const Field& f, Exponent i) { return i == 0 ? AlgebraElement(f) : fim::rr(f, i); }

TEST(Parse, SumsOfWordsAndTriples) {
  EXPECT_EQ(P("1 - xy"), one() - X() * Y());
  EXPECT_EQ(P("3/2*(1,2,2) - (0,0,0)"), P("3/2 xyyxx - 1"));
  EXPECT_EQ(P("2*yx + yx"), P("3yx"));
  EXPECT_TRUE(P("xy - xy").is_zero());
  EXPECT_TRUE(P("0").is_zero());
  EXPECT_THROW(P("1 +"), std::invalid_argument);
  EXPECT_THROW(P("xz"), std::invalid_argument);
}

TEST(Print, CanonicalOrder) {
  EXPECT_EQ(P("-1 + 3/2*xyyxx").to_string(), "-(0,0,0) + 3/2*(1,2,2)");
  EXPECT_EQ(AlgebraElement(Q).to_string(), "0");
  EXPECT_EQ(P(P("2 xy - yx").to_string()), P("2 xy - yx"));
}

TEST(Products, SpecExamples) {
  const AlgebraElement l1 = P("1 - xy");
  EXPECT_EQ(l1 * l1, l1);
  EXPECT_EQ(X() * Y() + Y() * X() - one() - P("xyyx"), -(fim::ell(Q, 1) * fim::rr(Q, 1)));
}

TEST(Products, OverFiniteField) {
  const AlgebraElement a = P("2 x + 3 y", F5);
  EXPECT_EQ(a * a, P("4 xx + 6 xy + 6 yx + 9 yy", F5));
  EXPECT_EQ(P("5 xy", F5), AlgebraElement(F5));
  EXPECT_THROW(X(Q) * X(F5), std::invalid_argument);
}

TEST(Projections, Definitions) {
  EXPECT_EQ(fim::ell(Q, 1), P("1 - xy"));
  EXPECT_EQ(fim::rr(Q, 1), P("1 - yx"));
  EXPECT_EQ(fim::ell(Q, 2), P("xy - xxyy"));
  EXPECT_THROW(fim::ell(Q, 0), std::invalid_argument);
  EXPECT_THROW(fim::rr(Q, 0), std::invalid_argument);
}

TEST(Projections, ReductionRules) {
  for (const Field& f : {Q, F5})
    for (Exponent i = 1; i <= 6; ++i) {
      EXPECT_EQ(fim::ell(f, i) * X(f), X(f) * ell0(f, i - 1)) << i;
      EXPECT_EQ(rr0(f, i - 1) * X(f), X(f) * fim::rr(f, i)) << i;
      EXPECT_EQ(ell0(f, i - 1) * Y(f), Y(f) * fim::ell(f, i)) << i;
      EXPECT_EQ(fim::rr(f, i) * Y(f), Y(f) * rr0(f, i - 1)) << i;
      EXPECT_TRUE((fim::pow(X(f), i) * fim::rr(f, i)).is_zero()) << i;
      EXPECT_TRUE((fim::pow(Y(f), i) * fim::ell(f, i)).is_zero()) << i;
    }
}

TEST(Projections, OrthogonalAndCommuting) {
  for (Exponent i = 1; i <= 5; ++i)
    for (Exponent j = 1; j <= 5; ++j) {
      const auto li = fim::ell(Q, i), lj = fim::ell(Q, j), ri = fim::rr(Q, i), rj = fim::rr(Q, j);
      EXPECT_EQ(li * lj, i == j ? li : AlgebraElement(Q));
      EXPECT_EQ(ri * rj, i == j ? ri : AlgebraElement(Q));
      EXPECT_EQ(li * rj, rj * li);
    }
}

TEST(CentralIdempotents, IdempotentCentralOrthogonal) {
  EXPECT_EQ(fim::central_idempotent(Q, 1), fim::rr(Q, 1) * fim::ell(Q, 1));
  for (Exponent n = 1; n <= 5; ++n) {
    const auto p = fim::central_idempotent(Q, n);
    EXPECT_EQ(p * p, p);
    EXPECT_EQ(p * X(), X() * p);
    EXPECT_EQ(p * Y(), Y() * p);
    for (Exponent m = 1; m < n; ++m) EXPECT_TRUE((p * fim::central_idempotent(Q, m)).is_zero());
  }
}

TEST(DegreeSplit, Components) {
  const auto l2 = fim::ell(Q, 2);
  const auto split = fim::degree_split(l2);
  ASSERT_EQ(split.size(), 1u);
  EXPECT_EQ(split.at(0), l2);
  const auto xl = X() * fim::ell(Q, 1);
  EXPECT_EQ(fim::degree_split(xl).at(1), xl);
  const auto mixed = P("x + y + 1 - xy + xxy");
  const auto parts = fim::degree_split(mixed);
  EXPECT_EQ(parts.at(1), P("x + xxy"));
  EXPECT_EQ(parts.at(-1), P("y"));
  EXPECT_EQ(parts.at(0), P("1 - xy"));
}

TEST(DegreeZero, Commutative) {
  std::vector<AlgebraElement> deg0;
  for (Exponent j = 0; j <= 3; ++j)
    for (Exponent i = 0; i <= j; ++i) deg0.push_back(AlgebraElement::monomial(Q, Monomial::from_exponents(i, j, j - i)));
  for (const auto& a : deg0)
    for (const auto& b : deg0) EXPECT_EQ(a * b, b * a);
}

TEST(YPrime, BehavesLikeY) {
  for (Exponent m = 1; m <= 3; ++m) {
    const auto yp = fim::y_prime(Q, m);
    EXPECT_EQ(yp, Y() + fim::pow(X(), m - 1) * fim::ell(Q, 1) * fim::rr(Q, m));
    EXPECT_EQ(X() * yp, X() * Y());
    EXPECT_NE(yp, Y());
    for (std::size_t n = 1; n <= 6; ++n)
      EXPECT_EQ(yp * fim::pow(X(), n), Y() * fim::pow(X(), n)) << m << " " << n;
  }
}

TEST(YPrime, GeneratesY) {
  for (Exponent m = 1; m <= 3; ++m) {
    const auto yp = fim::y_prime(Q, m);
    const auto xm1 = fim::pow(X(), m - 1);
    const auto rhs = yp - xm1 * (one() - X() * yp) *
                              (fim::pow(yp, m - 1) * xm1 - fim::pow(yp, m) * fim::pow(X(), m));
    EXPECT_EQ(rhs, Y()) << m;
  }
}

TEST(WordElement, MatchesProduct) {
  EXPECT_EQ(fim::word_element(Q, fim::Word::parse("xyyxx")), X() * Y() * Y() * X() * X());
  EXPECT_EQ(fim::word_element(Q, fim::Word::parse("")), one());
}

}  // namespace
