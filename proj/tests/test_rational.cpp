#include "jetcoh/exact_matrix.hpp"
#include "jetcoh/rational.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using jetcoh::frac;
using jetcoh::Rational;
using jetcoh::RationalMatrix;

TEST(Rational, TextRoundTrip) {
  for (const char* s : {"0", "1", "-3", "7/2", "-22/7", "123456789012345678901234567890/11"})
    EXPECT_EQ(jetcoh::to_string(jetcoh::parse_rational(s)), s);
  EXPECT_EQ(jetcoh::to_string(frac(6, -4)), "-3/2");
  EXPECT_THROW(jetcoh::parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(jetcoh::parse_rational("x"), std::invalid_argument);
}

TEST(ExactMatrix, RankMatchesGaussianOracle) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 1 + trial % 6, c = 1 + (trial * 5) % 7;
    RationalMatrix m(r, c);
    oracle::Mat o = oracle::zeros(r, c);
    // Low-rank products make rank deficiency common.
    const std::size_t inner = 1 + trial % 3;
    std::vector<std::vector<int>> a(r, std::vector<int>(inner)), b(inner, std::vector<int>(c));
    for (auto& row : a) for (auto& x : row) x = entry(rng);
    for (auto& row : b) for (auto& x : row) x = entry(rng);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        Rational v = 0;
        for (std::size_t t = 0; t < inner; ++t) v += a[i][t] * b[t][j];
        v /= 1 + trial % 4;
        m(i, j) = v;
        o[i][j] = v;
      }
    EXPECT_EQ(jetcoh::rank(m), oracle::rank(o)) << "trial " << trial;
    for (const auto& v : jetcoh::kernel_basis(m)) {
      const auto img = m.apply(v);
      for (const auto& x : img) EXPECT_EQ(x, 0);
    }
    EXPECT_EQ(jetcoh::kernel_basis(m).size() + jetcoh::rank(m), c);
  }
}

TEST(ExactMatrix, InverseAndDeterminant) {
  RationalMatrix m(2, 2);
  m(0, 0) = 2;
  m(0, 1) = 1;
  m(1, 0) = 7;
  m(1, 1) = frac(1, 2);
  EXPECT_EQ(jetcoh::determinant(m), frac(-6, 1));
  EXPECT_EQ(m * jetcoh::inverse(m), RationalMatrix::identity(2));
  RationalMatrix s(2, 2);
  s(0, 0) = 1;
  s(0, 1) = 2;
  s(1, 0) = 2;
  s(1, 1) = 4;
  EXPECT_THROW(jetcoh::inverse(s), std::domain_error);
  EXPECT_FALSE(jetcoh::is_positive_definite(s));
}

TEST(ExactMatrix, SparseDenseRoundTrip) {
  jetcoh::SparseRationalMatrix s(3, 4);
  s.add(2, 1, 3);
  s.add(0, 3, frac(1, 3));
  s.add(2, 1, -3);
  s.add(1, 0, 5);
  s.finalize();
  ASSERT_EQ(s.entries().size(), 2u);
  EXPECT_EQ(jetcoh::SparseRationalMatrix::from_dense(s.to_dense()).entries().size(), 2u);
  EXPECT_EQ(s.entries()[0].row, 0u);
}
