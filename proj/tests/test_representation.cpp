#include <gtest/gtest.h>

#include <stdexcept>

#include "fim/linear_solver.hpp"
#include "fim/representation.hpp"

namespace {

using fim::AlgebraElement;
using fim::BasisIndex;
using fim::Exponent;
using fim::Field;
using fim::FormulaOperator;
using fim::Matrix;
using fim::Monomial;
using fim::Scalar;
using fim::SupportedVector;

const Field Q = Field::rationals();

BasisIndex b(Exponent n, Exponent h) { return BasisIndex::standard(n, h); }
SupportedVector v(Exponent n, Exponent h) { return SupportedVector::basis(Q, b(n, h)); }
SupportedVector v_plus() { return SupportedVector::basis(Q, BasisIndex::extra()); }
AlgebraElement P(const std::string& text) { return AlgebraElement::parse(Q, text); }

TEST(BasisIndex, Validation) {
  EXPECT_THROW(b(2, 3), std::invalid_argument);
  EXPECT_THROW(b(2, 0), std::invalid_argument);
  EXPECT_EQ(b(2, 1).to_string(), "b_{2,1}");
  EXPECT_EQ(BasisIndex::extra().to_string(), "b_+");
  EXPECT_LT(b(9, 9), BasisIndex::extra());
}

TEST(Act, Generators) {
  EXPECT_EQ(fim::act(Monomial::x(), b(3, 1)), b(3, 2));
  EXPECT_FALSE(fim::act(Monomial::x(), b(3, 3)).has_value());
  EXPECT_EQ(fim::act(Monomial::y(), b(3, 2)), b(3, 1));
  EXPECT_FALSE(fim::act(Monomial::y(), b(3, 1)).has_value());
}

TEST(Act, MonomialMatchesLetterByLetter) {
  const auto x = FormulaOperator::x_std();
  const auto y = FormulaOperator::y_std();
  for (std::size_t idx = 0; idx < 1u << 7; ++idx) {
    std::string w;
    for (std::size_t t = 0; t < 7 && (idx >> t) > 0; ++t) w += ((idx >> t) & 1) ? 'x' : 'y';
    const Monomial m = fim::reduce_word(fim::Word::parse(w));
    for (const auto& index : fim::basis_indices(5, false)) {
      const auto image = fim::act(m, index);
      const auto expected = fim::apply_word(x, y, w, SupportedVector::basis(Q, index));
      EXPECT_EQ(image ? SupportedVector::basis(Q, *image) : SupportedVector(Q), expected) << w << " " << index.to_string();
    }
  }
}

TEST(Act, Projections) {
  const auto lr = fim::ell(Q, 1) * fim::rr(Q, 1);
  for (const auto& index : fim::basis_indices(4, false))
    EXPECT_EQ(fim::act(lr, SupportedVector::basis(Q, index)),
              index == b(1, 1) ? v(1, 1) : SupportedVector(Q))
        << index.to_string();
  const auto p2 = fim::central_idempotent(Q, 2);
  EXPECT_EQ(fim::act(p2, v(2, 1)), v(2, 1));
  EXPECT_EQ(fim::act(p2, v(2, 2)), v(2, 2));
  EXPECT_TRUE(fim::act(p2, v(3, 2)).is_zero());
  EXPECT_THROW(fim::act(lr, v_plus()), std::invalid_argument);
}

TEST(Operators, GalleryFormulas) {
  const auto xc = FormulaOperator::x_ceg();
  const auto yc = FormulaOperator::y_ceg();
  EXPECT_EQ(xc.apply(v(2, 2)), v_plus());
  EXPECT_TRUE(xc.apply(v_plus()).is_zero());
  EXPECT_EQ(yc.apply(v(2, 1)), v(3, 1));
  EXPECT_EQ(yc.apply(v_plus()), v(1, 1));
  EXPECT_EQ(FormulaOperator::u().apply(v(3, 1)), v(3, 3));
  EXPECT_EQ(FormulaOperator::u().apply(v_plus()), v_plus());
  EXPECT_TRUE(FormulaOperator::z_xu().apply(v(2, 1)).is_zero());
  EXPECT_EQ(FormulaOperator::z_xu().apply(v(2, 2)), v(2, 2));
  EXPECT_EQ(FormulaOperator::z_xu().apply(v_plus()), v(1, 1));
  EXPECT_THROW(FormulaOperator::x_std().apply(v_plus()), std::invalid_argument);
}

TEST(Operators, Algebra) {
  const auto xs = FormulaOperator::x_std();
  const auto ys = FormulaOperator::y_std();
  const auto xy = FormulaOperator::compose(xs, ys);
  EXPECT_EQ(xy.apply(v(2, 2)), v(2, 2));
  EXPECT_TRUE(xy.apply(v(2, 1)).is_zero());
  const auto two_x = FormulaOperator::scaled(Scalar::from_int(Q, 2), xs);
  EXPECT_EQ(FormulaOperator::sum(two_x, ys).apply(v(3, 2)), Scalar::from_int(Q, 2) * v(3, 3) + v(3, 1));
  EXPECT_THROW(FormulaOperator::sum(xs, FormulaOperator::u()), std::invalid_argument);
  EXPECT_THROW(FormulaOperator::compose(xs, FormulaOperator::u()), std::invalid_argument);
  EXPECT_EQ(FormulaOperator::parse("u").apply(v(2, 2)), v(2, 1));
  EXPECT_THROW(FormulaOperator::parse("w"), std::invalid_argument);
}

TEST(Counterexample, FirstFailureWitness) {
  const auto failure = fim::find_relation_failure(FormulaOperator::x_ceg(), FormulaOperator::y_ceg(), 6,
                                                  fim::basis_indices(12, true));
  ASSERT_TRUE(failure.has_value());
  EXPECT_EQ(failure->family, 1);
  EXPECT_EQ(failure->j, 2u);
  EXPECT_EQ(failure->index, b(2, 1));
  EXPECT_EQ(failure->lhs, v(2, 2));
  EXPECT_EQ(failure->rhs, v(1, 1));
}

TEST(Counterexample, StandardPairSatisfiesRelations) {
  EXPECT_FALSE(fim::find_relation_failure(FormulaOperator::x_std(), FormulaOperator::y_std(), 6,
                                          fim::basis_indices(10, false))
                   .has_value());
}

TEST(Counterexample, RepairWithU) {
  const auto xu = FormulaOperator::compose(FormulaOperator::x_ceg(), FormulaOperator::u());
  EXPECT_EQ(xu.apply(v(3, 1)), v_plus());
  EXPECT_EQ(xu.apply(v(3, 2)), v(3, 2));
  EXPECT_TRUE(xu.apply(v_plus()).is_zero());
  EXPECT_FALSE(fim::find_relation_failure(xu, FormulaOperator::z_xu(), 5, fim::basis_indices(8, false)).has_value());
}

TEST(Truncation, IndexAndDimension) {
  EXPECT_EQ(fim::truncation_dim(4), 10u);
  EXPECT_EQ(fim::truncation_index(1, 1), 0u);
  EXPECT_EQ(fim::truncation_index(3, 2), 4u);
}

TEST(Truncation, ProjectionMatrices) {
  const Matrix p1 = fim::truncation_matrix(fim::central_idempotent(Q, 1), 2);
  Matrix expected = Matrix::zero(Q, 3, 3);
  expected(0, 0) = Scalar::one(Q);
  EXPECT_EQ(p1, expected);
  EXPECT_EQ(fim::rank(fim::truncation_matrix(fim::ell(Q, 2), 3)), 2u);
}

TEST(Truncation, IsARepresentation) {
  const auto a = P("x + 2 yx - xxy");
  const auto c = P("1 - 3 y + xyy");
  EXPECT_EQ(fim::truncation_matrix(a * c, 4), fim::truncation_matrix(a, 4) * fim::truncation_matrix(c, 4));
}

TEST(Truncation, StandardPairRelationsForSmallN) {
  for (Exponent n = 1; n <= 6; ++n) {
    const Matrix x = fim::truncation_matrix(AlgebraElement::x(Q), n);
    const Matrix y = fim::truncation_matrix(AlgebraElement::y(Q), n);
    EXPECT_FALSE(fim::verify_strong(x, y, n + 2).has_value()) << n;
  }
}

TEST(Independence, Examples) {
  std::vector<Monomial> small;
  for (Exponent j = 0; j <= 2; ++j)
    for (Exponent i = 0; i <= j; ++i)
      for (Exponent k = 0; k <= j; ++k) small.push_back(Monomial::from_exponents(i, j, k));
  EXPECT_EQ(small.size(), 14u);
  EXPECT_TRUE(fim::independence_check(small, Q, 3));
  const std::vector<Monomial> four = {Monomial::identity(), Monomial::from_exponents(1, 1, 0),
                                      Monomial::from_exponents(0, 1, 1), Monomial::from_exponents(1, 2, 1)};
  EXPECT_FALSE(fim::independence_check(four, Q, 1));
  // xyyx vanishes on V_1 and V_2, so independence needs V_3.
  EXPECT_FALSE(fim::independence_check(four, Q, 2));
  EXPECT_TRUE(fim::independence_check(four, Q, 3));
}

TEST(Faithfulness, FirstFailure) {
  EXPECT_EQ(fim::faithfulness_first_failure(fim::truncation_matrix(AlgebraElement::x(Q), 3)), 4u);
  EXPECT_EQ(fim::faithfulness_first_failure(Matrix::zero(Q, 2, 2)), 2u);
  EXPECT_EQ(fim::faithfulness_first_failure(Matrix::identity(Q, 2)), 1u);
  EXPECT_FALSE(fim::faithfulness_first_failure(Matrix(Q, 0, 0)).has_value());
}

TEST(Faithfulness, ComplementChecks) {
  for (std::size_t i = 1; i <= 3; ++i) {
    const auto report = fim::lxr_image_check(i, 4);
    EXPECT_TRUE(report.holds()) << i;
  }
  const auto first = fim::lxr_image_check(1, 3);
  EXPECT_EQ(first.r_rank, 3u);
  EXPECT_EQ(first.ker_lower, 0u);
  EXPECT_EQ(first.ker_upper, 3u);
}

}  // namespace
