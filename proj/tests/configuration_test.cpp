#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "rigged/configuration.hpp"
#include "rigged/error.hpp"

namespace {

using rigged::Configuration;

Configuration dense(std::vector<int> c, std::int64_t offset = 0) { return Configuration(offset, std::move(c)); }

TEST(Configuration, TrimsToCanonicalWindow) {
  const Configuration a(-2, {0, 0, 3, 0, 1, 0});
  EXPECT_EQ(a.offset(), 0);
  EXPECT_EQ(a.counts(), (std::vector<int>{3, 0, 1}));
  EXPECT_EQ(a, dense({3, 0, 1}));
  EXPECT_TRUE(Configuration(5, {0, 0}).is_zero());
  EXPECT_EQ(Configuration(5, {0, 0}), Configuration());
  EXPECT_EQ(Configuration(a.offset(), a.counts()), a);
}

TEST(Configuration, RejectsNegativeCounts) {
  EXPECT_THROW(dense({1, -1}), rigged::InputError);
  EXPECT_THROW(dense({1}).adjusted(0, -2), rigged::InputError);
}

TEST(Configuration, Functionals) {
  EXPECT_EQ(rigged::s_functional(dense({3, 0, 0, 1}), 0), 3);
  EXPECT_EQ(rigged::s_functional(Configuration(), 7), 0);
  EXPECT_EQ(rigged::s_functional(dense({1, 2, 1, 1}), 1), 3);
  EXPECT_EQ(rigged::l_functional(dense({3, 0, 0, 1}), 0), 6);
  EXPECT_EQ(rigged::l_functional(Configuration(), -4), 0);
  EXPECT_EQ(rigged::l_functional(dense({1, 1, 1, 1}), 1), 6);
}

TEST(Configuration, Admissibility) {
  EXPECT_TRUE(rigged::is_admissible(dense({3, 0, 0, 1}), 3, 3));
  EXPECT_FALSE(rigged::is_admissible(dense({1, 0, 1}), 1, 3));
  EXPECT_TRUE(rigged::is_admissible(dense({1, 0, 1}), 1, 2));
  EXPECT_TRUE(rigged::is_admissible(dense({1, 1, 1}), 4, 3));
  EXPECT_THROW(rigged::is_admissible(dense({1}), 1, 4), rigged::InputError);
}

TEST(Configuration, Weight) {
  EXPECT_EQ(rigged::weight(dense({3, 0, 0, 1}), 3), 3);
  EXPECT_EQ(rigged::weight(Configuration(), 2), 0);
  EXPECT_EQ(rigged::weight(dense({1, 1, 1}), 4), 2);
  EXPECT_THROW(rigged::weight(dense({1, 0, 1}), 1), rigged::InputError);
  EXPECT_THROW(rigged::weight(dense({1}), 0), rigged::InputError);
}

TEST(Configuration, EnergyAndLength) {
  EXPECT_EQ(rigged::energy(dense({3, 0, 0, 1})), 3);
  EXPECT_EQ(rigged::energy(Configuration()), 0);
  EXPECT_EQ(rigged::energy(dense({1, 2, 1, 1})), 7);
  EXPECT_EQ(rigged::energy(dense({2}, -3)), -6);
  EXPECT_EQ(rigged::length(dense({3, 0, 0, 1})), 4);
  EXPECT_EQ(rigged::length(Configuration()), 0);
  EXPECT_EQ(rigged::length(dense({1, 1, 1})), 3);
}

TEST(Enumerate, SpecExamples) {
  const auto fixed = rigged::enumerate(1, 3, 3, 1, 0);
  EXPECT_EQ(std::set<Configuration>(fixed.begin(), fixed.end()),
            (std::set<Configuration>{dense({1}), dense({1, 0, 0, 1})}));
  const auto tiny = rigged::enumerate(1, 3, 0);
  EXPECT_EQ(std::set<Configuration>(tiny.begin(), tiny.end()),
            (std::set<Configuration>{Configuration(), dense({1})}));
  EXPECT_EQ(rigged::enumerate(1, 3, 3).size(), 6u);
  EXPECT_TRUE(rigged::enumerate(1, 3, 3, 2).empty());
  EXPECT_TRUE(rigged::enumerate(2, 3, 0, 0, 1).empty());
}

TEST(Enumerate, CountsMatchBruteForce) {
  for (int k = 1; k <= 3; ++k) {
    for (int r = 2; r <= 3; ++r) {
      for (int N = 0; N <= 6; ++N) {
        const auto all = rigged::enumerate(k, r, N);
        EXPECT_EQ(static_cast<long long>(all.size()), oracle::admissible_count(k, r, N))
            << "k=" << k << " r=" << r << " N=" << N;
        const std::set<Configuration> distinct(all.begin(), all.end());
        EXPECT_EQ(distinct.size(), all.size());
        for (const auto& a : all) {
          EXPECT_TRUE(a.is_positively_supported());
          EXPECT_TRUE(rigged::is_admissible(a, k, r));
          EXPECT_TRUE(a.is_zero() || a.max_index() <= N);
        }
      }
    }
  }
}

TEST(Enumerate, FiltersByEnergyAndWeight) {
  rigged::EnumerationSpec spec;
  spec.k = 3;
  spec.max_column = 7;
  spec.max_energy = 9;
  spec.max_weight = 2;
  std::size_t expected = 0;
  for (const auto& a : rigged::enumerate(3, 3, 7)) {
    expected += rigged::energy(a) <= 9 && rigged::weight(a, 3) <= 2;
  }
  EXPECT_EQ(rigged::enumerate(spec).size(), expected);
}

TEST(WeightProperty, BoundsAreAttained) {
  for (int k = 1; k <= 4; ++k) {
    for (const auto& a : rigged::enumerate(k, 3, 6)) {
      const int w = rigged::weight(a, k);
      EXPECT_EQ(w == 0, a.is_zero());
      if (a.is_zero()) continue;
      bool attained = false;
      for (std::int64_t i = a.min_index() - 3; i <= a.max_index() + 3; ++i) {
        const int s = rigged::s_functional(a, i);
        const int l = rigged::l_functional(a, i);
        ASSERT_LE(s, w);
        ASSERT_LE(l, k + w);
        attained = attained || s == w || l == k + w;
      }
      EXPECT_TRUE(attained);
    }
  }
}

TEST(Configuration, ShiftAndRestrict) {
  const Configuration a = dense({1, 2, 0, 3});
  EXPECT_EQ(a.shifted(2), dense({1, 2, 0, 3}, 2));
  EXPECT_EQ(a.restricted(1, 2), dense({2}, 1));
  EXPECT_EQ(a.restricted(5, 9), Configuration());
  EXPECT_EQ(a.restricted(0, 1) + a.restricted(2, 3), a);
}

}  // namespace
