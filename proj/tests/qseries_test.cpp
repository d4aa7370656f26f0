#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rigged/error.hpp"
#include "rigged/qseries.hpp"

namespace {

using rigged::QPolynomial;

QPolynomial poly(std::vector<long> coeffs) {
  QPolynomial p;
  for (std::size_t d = 0; d < coeffs.size(); ++d) p.add_term(static_cast<std::int64_t>(d), coeffs[d]);
  return p;
}

TEST(QPolynomial, RingOperations) {
  const QPolynomial one_plus_q = poly({1, 1});
  EXPECT_EQ(one_plus_q * one_plus_q, poly({1, 2, 1}));
  EXPECT_TRUE((one_plus_q - one_plus_q).is_zero());
  const QPolynomial cut = one_plus_q.truncated(1);
  EXPECT_EQ(cut * cut, poly({1, 2}).truncated(1));
  EXPECT_EQ((cut * cut).order(), 1);
  EXPECT_EQ((one_plus_q + cut).order(), 1);
  EXPECT_FALSE((one_plus_q * one_plus_q).order().has_value());
}

TEST(QPolynomial, BigCoefficients) {
  QPolynomial p = poly({1, 1});
  QPolynomial acc(1);
  for (int i = 0; i < 200; ++i) acc = acc * p;
  // The middle binomial coefficient C(200,100) exceeds 64 bits.
  EXPECT_EQ(acc.coefficient(100).get_str(), "90548514656103281165404177077484163874504589675413336841320");
}

TEST(QPolynomial, ExactDivision) {
  EXPECT_EQ(poly({1, 0, 0, -1}).divided_exactly_by(poly({1, -1})), poly({1, 1, 1}));
  EXPECT_THROW(poly({1, 0, 1}).divided_exactly_by(poly({1, -1})), rigged::InternalError);
}

TEST(QPolynomial, TextForm) {
  EXPECT_EQ(poly({1, 0, 1, 1}).to_string(), "1 + q^2 + q^3");
  EXPECT_EQ(poly({2, 1, 1, 2}).to_string(), "2 + q + q^2 + 2*q^3");
  EXPECT_EQ(poly({0, -1, 3}).to_string(), "-q + 3*q^2");
  EXPECT_EQ(QPolynomial().to_string(), "0");
  EXPECT_EQ(poly({1, 1}).truncated(3).to_string(), "1 + q + O(q^4)");
}

TEST(QPolynomial, FirstDifference) {
  EXPECT_FALSE(poly({1, 2}).first_difference(poly({1, 2})).has_value());
  EXPECT_EQ(poly({1, 2, 3}).first_difference(poly({1, 2, 4})), 2);
  EXPECT_FALSE(poly({1, 2, 3}).truncated(1).first_difference(poly({1, 2, 4})).has_value());
}

TEST(QBinomial, Examples) {
  for (int m = 0; m <= 5; ++m) EXPECT_EQ(rigged::q_binomial(m, 0), QPolynomial(1));
  EXPECT_EQ(rigged::q_binomial(2, 1), poly({1, 1}));
  EXPECT_EQ(rigged::q_binomial(4, 2), poly({1, 1, 2, 1, 1}));
  EXPECT_TRUE(rigged::q_binomial(1, 2).is_zero());
  EXPECT_TRUE(rigged::q_binomial(3, -1).is_zero());
  EXPECT_TRUE(rigged::q_binomial(-2, 1).is_zero());
}

TEST(QBinomial, MatchesBoxPartitions) {
  for (int m = 0; m <= 10; ++m) {
    for (int n = 0; n <= m; ++n) {
      const QPolynomial p = rigged::q_binomial(m, n);
      EXPECT_EQ(p, rigged::q_binomial(m, m - n));
      EXPECT_EQ(p.degree(), static_cast<std::int64_t>(n) * (m - n));
      const auto tally = oracle::box_partitions(n, m - n);
      std::int64_t terms = 0;
      for (const auto& [d, c] : p.terms()) {
        EXPECT_GT(c, 0);
        EXPECT_EQ(c, static_cast<long>(tally.at(static_cast<int>(d)))) << "m=" << m << " n=" << n << " d=" << d;
        ++terms;
      }
      EXPECT_EQ(terms, static_cast<std::int64_t>(tally.size()));
    }
  }
}

TEST(InvPochhammer, Examples) {
  EXPECT_EQ(rigged::inv_pochhammer(0, 5), QPolynomial(1).truncated(5));
  EXPECT_EQ(rigged::inv_pochhammer(1, 3), poly({1, 1, 1, 1}).truncated(3));
  EXPECT_EQ(rigged::inv_pochhammer(2, 4), poly({1, 1, 2, 2, 3}).truncated(4));
}

TEST(InvPochhammer, MatchesDecreasingTuples) {
  for (int m = 0; m <= 4; ++m) {
    const QPolynomial p = rigged::inv_pochhammer(m, 12);
    const auto tally = oracle::decreasing_tuples(m, 12);
    for (int j = 0; j <= 12; ++j) EXPECT_EQ(p.coefficient(j), static_cast<long>(tally[static_cast<std::size_t>(j)])) << m << " " << j;
  }
}

TEST(QuadraticForm, Examples) {
  for (int k = 1; k <= 4; ++k) {
    for (int l = 1; l <= k; ++l) {
      std::vector<int> unit(static_cast<std::size_t>(k), 0);
      unit[static_cast<std::size_t>(l - 1)] = 1;
      EXPECT_EQ(rigged::quadratic_form_Q(unit, k), 0);
    }
  }
  const std::vector<int> two{2}, one_one{1, 1}, wrong{1};
  EXPECT_EQ(rigged::quadratic_form_Q(two, 1), 3);
  EXPECT_EQ(rigged::quadratic_form_Q(one_one, 2), 3);
  EXPECT_THROW(rigged::quadratic_form_Q(wrong, 2), rigged::InputError);
}

}  // namespace
