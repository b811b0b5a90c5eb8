#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "fim/linear_solver.hpp"
#include "fim/matrix_io.hpp"
#include "fim/representation.hpp"

namespace {

using fim::Field;
using fim::Matrix;
using fim::RelationFailure;
using fim::Scalar;

const Field Q = Field::rationals();
const Field F5 = Field::prime(5);

void expect_strong(const Matrix& a, const Matrix& y, std::size_t jmax) {
  const auto failure = fim::verify_strong(a, y, jmax);
  EXPECT_FALSE(failure.has_value()) << "family " << failure->family << " j=" << failure->j;
  EXPECT_TRUE(fim::is_inverse_pair(a, y));
}

TEST(Solver, Identity) {
  const Matrix id = Matrix::identity(Q, 3);
  EXPECT_EQ(fim::strong_inner_inverse(id), id);
}

TEST(Solver, InvertibleDiagonalPart) {
  const Matrix a = Matrix::from_ints(Q, {{2, 0}, {0, 0}});
  Matrix expected = Matrix::zero(Q, 2, 2);
  expected(0, 0) = Scalar::parse(Q, "1/2");
  EXPECT_EQ(fim::strong_inner_inverse(a), expected);
}

TEST(Solver, JordanBlockGetsReverseShift) {
  // e1 -> e2 -> e3 -> 0
  const Matrix a = Matrix::from_ints(Q, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}});
  const Matrix y = fim::strong_inner_inverse(a);
  expect_strong(a, y, 6);
  EXPECT_EQ(y * a * Matrix::from_ints(Q, {{1}, {0}, {0}}), Matrix::from_ints(Q, {{1}, {0}, {0}}));
  EXPECT_TRUE((y * Matrix::from_ints(Q, {{1}, {0}, {0}})).is_zero());
}

TEST(Chains, LengthsFollowJordanStructure) {
  // e1 -> e2 -> 0, e3 -> 0
  const Matrix a = Matrix::from_ints(Q, {{0, 0, 0}, {1, 0, 0}, {0, 0, 0}});
  const auto chains = fim::basic_chains(a);
  ASSERT_EQ(chains.size(), 2u);
  EXPECT_EQ(chains[0].length(), 2u);
  EXPECT_EQ(chains[1].length(), 1u);
  const auto zero_chains = fim::basic_chains(Matrix::zero(Q, 3, 3));
  ASSERT_EQ(zero_chains.size(), 3u);
  for (const auto& c : zero_chains) EXPECT_EQ(c.length(), 1u);
  EXPECT_TRUE(fim::basic_chains(Matrix::identity(Q, 2)).empty());
}

TEST(Chains, VectorsFollowTheMap) {
  const Matrix a = Matrix::from_ints(Q, {{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}});
  for (const auto& c : fim::basic_chains(a)) {
    for (std::size_t t = 0; t + 1 < c.length(); ++t) EXPECT_EQ(a * c.vectors[t], c.vectors[t + 1]);
    EXPECT_TRUE(fim::Matrix::from_columns(Q, 4, {a * c.vectors.back()}).is_zero());
  }
}

TEST(Fitting, SplitsTheSpace) {
  const Matrix a = Matrix::from_ints(Q, {{1, 1, 0}, {0, 0, 1}, {0, 0, 0}});
  const auto split = fim::fitting_split(a);
  EXPECT_EQ(split.image_basis.cols() + split.kernel_basis.cols(), 3u);
  EXPECT_EQ(fim::rank(fim::hconcat(split.image_basis, split.kernel_basis)), 3u);
  EXPECT_EQ(split.exponent, 2u);
  EXPECT_EQ(fim::fitting_split(Matrix::identity(Q, 2)).exponent, 0u);
}

TEST(Verify, ZeroIsNotAnInverse) {
  const Matrix a = Matrix::from_ints(Q, {{0, 0}, {1, 0}});
  EXPECT_EQ(fim::verify_strong(a, Matrix::zero(Q, 2, 2), 3), (RelationFailure{1, 1}));
  EXPECT_FALSE(fim::is_inverse_pair(a, Matrix::zero(Q, 2, 2)));
}

TEST(Conjugate, SecondInverseForNilpotent) {
  const Matrix a = Matrix::from_ints(Q, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}});
  const Matrix y = fim::strong_inner_inverse(a);
  const Matrix y2 = fim::conjugate_by_one_plus(a, y);
  EXPECT_NE(y2, y);
  EXPECT_FALSE(fim::verify_strong(a, y2, 6).has_value());
  const Matrix minus_one = Matrix::identity(Q, 2) * Scalar::from_int(Q, -1);
  EXPECT_THROW(fim::conjugate_by_one_plus(minus_one, Matrix::identity(Q, 2)),
               std::invalid_argument);
}

TEST(Conjugate, TruncatedShiftHasAnotherInverse) {
  const Matrix x = fim::truncation_matrix(fim::AlgebraElement::x(Q), 3);
  const Matrix y = fim::truncation_matrix(fim::AlgebraElement::y(Q), 3);
  expect_strong(x, y, 5);
  const Matrix other = fim::conjugate_by_one_plus(x, y);
  EXPECT_NE(other, y);
  EXPECT_FALSE(fim::verify_strong(x, other, 5).has_value());
}

Matrix random_matrix(const Field& f, std::size_t n, std::mt19937_64& rng, int density) {
  std::uniform_int_distribution<int> entry(-2, 2);
  std::uniform_int_distribution<int> keep(0, 9);
  Matrix m(f, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (keep(rng) < density) m(r, c) = Scalar::from_int(f, entry(rng));
  return m;
}

TEST(Solver, RandomSparseAndLowRank) {
  std::mt19937_64 rng(5);
  for (const Field& f : {Q, F5})
    for (int t = 0; t < 60; ++t) {
      const std::size_t n = 1 + t % 6;
      Matrix a = random_matrix(f, n, rng, 3);
      if (t % 3 == 0) a = random_matrix(f, n, rng, 5) * a * a;
      expect_strong(a, fim::strong_inner_inverse(a), n + 3);
    }
}

TEST(Solver, StrictlyTriangularIsNilpotent) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 2 + t % 5;
    Matrix a = random_matrix(Q, n, rng, 6);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = r; c < n; ++c) a(r, c) = Scalar::zero(Q);
    const Matrix y = fim::strong_inner_inverse(a);
    expect_strong(a, y, n + 2);
    std::size_t total = 0;
    for (const auto& c : fim::basic_chains(a)) total += c.length();
    EXPECT_EQ(total, n);
  }
}

TEST(MatrixIo, RoundTrip) {
  const Matrix a = Matrix::from_ints(Q, {{1, 2}, {3, 4}});
  const auto j = fim::matrix_to_json(a);
  EXPECT_EQ(j["field"], "q");
  EXPECT_EQ(j["dim"], 2);
  EXPECT_EQ(fim::matrix_from_json(j), a);
  const auto parsed = fim::matrix_from_json(nlohmann::json::parse(R"({"field":"q","dim":1,"rows":[["3/2"]]})"));
  EXPECT_EQ(parsed(0, 0).to_string(), "3/2");
  const auto over_f5 = fim::matrix_from_json(j, F5);
  EXPECT_EQ(over_f5.field(), F5);
  EXPECT_EQ(over_f5(1, 1).to_string(), "4");
}

TEST(MatrixIo, ErrorsNamePosition) {
  const auto bad = nlohmann::json::parse(R"({"field":"q","dim":2,"rows":[[1,2],[3,"z"]]})");
  try {
    fim::matrix_from_json(bad);
    FAIL();
  } catch (const std::invalid_argument& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("row 1"), std::string::npos) << what;
    EXPECT_NE(what.find("column 1"), std::string::npos) << what;
  }
  EXPECT_THROW(fim::matrix_from_json(nlohmann::json::parse(R"({"field":"q","dim":2,"rows":[[1,2]]})")),
               std::invalid_argument);
  EXPECT_THROW(fim::matrix_from_json(nlohmann::json::parse(R"({"field":"q","dim":1})")),
               std::invalid_argument);
}

}  // namespace
