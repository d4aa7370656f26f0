#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "rigged/bijection.hpp"
#include "rigged/error.hpp"
#include "rigged/moves.hpp"
#include "rigged/phase.hpp"
#include "rigged/qseries.hpp"

namespace {

using rigged::Configuration;
using rigged::RiggedPart;
using rigged::RiggedPartition;

Configuration dense(std::vector<int> c, std::int64_t offset = 0) { return Configuration(offset, std::move(c)); }

RiggedPartition rp(std::vector<int> w, std::vector<std::int64_t> r) {
  std::vector<RiggedPart> parts;
  for (std::size_t i = 0; i < w.size(); ++i) parts.push_back({w[i], r[i]});
  return RiggedPartition(std::move(parts));
}

TEST(Phase, Examples) {
  EXPECT_EQ(rigged::phase(4, 3, 2), 5);
  EXPECT_EQ(rigged::phase(4, 3, 1), 2);
  EXPECT_EQ(rigged::phase(5, 4, 3), 8);
  for (int k = 1; k <= 8; ++k) {
    for (int j = 1; j <= k; ++j) EXPECT_EQ(rigged::phase(k, k, j), 3 * j);
  }
  EXPECT_THROW(rigged::phase(3, 4, 1), rigged::InputError);
  EXPECT_THROW(rigged::phase(3, 0, 1), rigged::InputError);
  EXPECT_EQ(rigged::phase_r2(3, 2), 4);
}

TEST(Phase, TableIsSymmetricAndMatchesFormula) {
  for (int k = 1; k <= 6; ++k) {
    const rigged::PhaseTable A(k);
    for (int l = 1; l <= k; ++l) {
      for (int lp = 1; lp <= k; ++lp) {
        EXPECT_EQ(A(l, lp), A(lp, l));
        EXPECT_EQ(A(l, lp), oracle::phase(k, l, lp));
      }
    }
  }
}

TEST(RiggedPartition, EnforcesOrdering) {
  EXPECT_NO_THROW(rp({3, 3, 1}, {2, 2, -1}));
  EXPECT_THROW(rp({1, 3}, {0, 0}), rigged::InputError);
  EXPECT_THROW(rp({2, 2}, {0, 1}), rigged::InputError);
  EXPECT_THROW(rp({0}, {0}), rigged::InputError);
  EXPECT_TRUE(RiggedPartition().empty());
}

TEST(Iota, Examples) {
  EXPECT_EQ(rigged::iota(dense({3, 0, 0, 1}), 3), rp({3, 1}, {0, 0}));
  EXPECT_EQ(rigged::iota(dense({1, 1, 1}), 4), rp({2, 1}, {1, 0}));
  EXPECT_EQ(rigged::iota(dense({1, 2, 1, 1}), 5), rp({3, 2}, {2, 1}));
  EXPECT_EQ(rigged::iota(Configuration(), 2), RiggedPartition());
  EXPECT_THROW(rigged::iota(dense({1, 0, 1}), 1), rigged::InputError);
}

TEST(Kappa, Examples) {
  EXPECT_EQ(rigged::kappa(rp({3, 1}, {0, 0}), 3), dense({3, 0, 0, 1}));
  EXPECT_TRUE(rigged::kappa(RiggedPartition(), 3).is_zero());
  EXPECT_EQ(rigged::kappa(rp({2, 1}, {6, 2}), 4), dense({1, 0, 2}, 2));
  EXPECT_EQ(rigged::kappa(rp({3, 2}, {10, 6}), 5), dense({2, 1, 2}, 3));
  EXPECT_THROW(rigged::kappa(rp({4}, {0}), 3), rigged::InputError);
}

TEST(Energy, Examples) {
  const std::vector<int> l31{3, 1}, l21{2, 1}, single{2};
  const std::vector<std::int64_t> r10{1, 0};
  EXPECT_EQ(rigged::e0(l31, 3), 3);
  EXPECT_EQ(rigged::e0(l21, 4), 2);
  EXPECT_EQ(rigged::e0(l21, 4) + rigged::e1(r10), rigged::energy(dense({1, 1, 1})));
  EXPECT_EQ(rigged::e0(single, 5), 0);
}

TEST(Multiplicities, Examples) {
  const std::vector<int> l31{3, 1}, empty{}, l221{2, 2, 1};
  EXPECT_EQ(rigged::multiplicities(l31, 3), (std::vector<int>{1, 0, 1}));
  EXPECT_EQ(rigged::multiplicities(empty, 2), (std::vector<int>{0, 0}));
  EXPECT_EQ(rigged::multiplicities(l221, 2), (std::vector<int>{1, 2}));
}

TEST(E0Property, QuadraticFormMatchesPairwiseSum) {
  for (int k = 1; k <= 4; ++k) {
    for (const auto& lambda : oracle::partitions(k, 6)) {
      long long pairwise = 0;
      for (std::size_t i = 0; i < lambda.size(); ++i) {
        for (std::size_t j = i + 1; j < lambda.size(); ++j) pairwise += oracle::phase(k, lambda[i], lambda[j]);
      }
      EXPECT_EQ(rigged::e0(lambda, k), pairwise);
      EXPECT_EQ(rigged::quadratic_form_Q(rigged::multiplicities(lambda, k), k), pairwise);
    }
  }
}

class RoundTrip : public ::testing::TestWithParam<int> {};

TEST_P(RoundTrip, PositiveConfigurations) {
  const int k = GetParam();
  std::set<RiggedPartition> images;
  for (const auto& a : rigged::enumerate(k, 3, 7)) {
    const RiggedPartition r = rigged::iota(a, k);
    ASSERT_EQ(rigged::kappa(r, k), a) << "k=" << k;
    EXPECT_EQ(rigged::degree(r, k), rigged::energy(a));
    EXPECT_EQ(r.total_weight(), rigged::length(a));
    EXPECT_LE(r.largest_weight(), rigged::weight(a, k));
    EXPECT_EQ(r.largest_weight(), rigged::weight(a, k));
    for (auto rho : r.riggings()) EXPECT_GE(rho, 0);
    EXPECT_TRUE(images.insert(r).second);
  }
}

TEST_P(RoundTrip, ShiftedConfigurations) {
  // Support below zero gives some negative rigging, and the maps still
  // invert each other.
  const int k = GetParam();
  for (const auto& b : rigged::enumerate(k, 3, 5)) {
    if (b.is_zero()) continue;
    for (std::int64_t shift : {-3, -1, 2}) {
      const Configuration a = b.shifted(shift);
      const RiggedPartition r = rigged::iota(a, k);
      ASSERT_EQ(rigged::kappa(r, k), a);
      EXPECT_EQ(rigged::degree(r, k), rigged::energy(a));
      bool all_positive = true;
      for (auto rho : r.riggings()) all_positive = all_positive && rho >= 0;
      EXPECT_EQ(all_positive, a.is_positively_supported());
    }
  }
}

TEST_P(RoundTrip, RiggedPartitionsFirst) {
  // kappa then iota on every positive rigged partition of degree <= 9.
  const int k = GetParam();
  std::function<void(std::vector<RiggedPart>&, int, std::int64_t)> go = [&](std::vector<RiggedPart>& parts,
                                                                             int cap, std::int64_t rcap) {
    const RiggedPartition r(parts);
    if (rigged::degree(r, k) > 9) return;
    ASSERT_EQ(rigged::iota(rigged::kappa(r, k), k), r);
    for (int w = cap; w >= 1; --w) {
      const std::int64_t top = w == cap ? rcap : 9;
      for (std::int64_t rho = 0; rho <= top; ++rho) {
        parts.push_back({w, rho});
        go(parts, w, rho);
        parts.pop_back();
      }
    }
  };
  std::vector<RiggedPart> parts;
  go(parts, k, 9);
}

INSTANTIATE_TEST_SUITE_P(Levels, RoundTrip, ::testing::Values(1, 2, 3, 4));

TEST(IotaProperty, RightMoveRaisesFirstRigging) {
  for (int k = 1; k <= 4; ++k) {
    for (const auto& a : rigged::enumerate(k, 3, 6)) {
      if (a.is_zero()) continue;
      const RiggedPartition before = rigged::iota(a, k);
      auto expected = before.parts();
      expected.front().rigging += 1;
      EXPECT_EQ(rigged::iota(rigged::right_move(a, {k, rigged::weight(a, k)}), k).parts(), expected);
    }
  }
}

TEST(IotaProperty, ShiftByOneColumnAddsWeights) {
  for (int k = 1; k <= 4; ++k) {
    for (const auto& a : rigged::enumerate(k, 3, 6)) {
      auto expected = rigged::iota(a, k).parts();
      for (auto& p : expected) p.rigging += p.weight;
      EXPECT_EQ(rigged::iota(a.shifted(1), k).parts(), expected);
    }
  }
}

TEST(IotaProperty, PassingShiftsRiggingsByPhase) {
  for (int k = 2; k <= 4; ++k) {
    for (const auto& a : rigged::enumerate(k, 3, 5)) {
      const int lp = rigged::weight(a, k);
      for (int l = lp + 1; l <= k; ++l) {
        auto expected = rigged::iota(a, k).parts();
        for (auto& p : expected) p.rigging += oracle::phase(k, l, p.weight);
        EXPECT_EQ(rigged::iota(rigged::pass_particle(a, k, l), k).parts(), expected);
      }
    }
  }
}

}  // namespace
