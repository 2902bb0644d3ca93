// Copyright 2026 The hw Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "hw/group.hpp"
#include "hw/rootsys.hpp"

using namespace hw;

TEST(RootSystem, PositiveRootCounts) {
  EXPECT_EQ(RootSystem::build(RootType::kA, 2).positive_roots().size(), 3u);
  EXPECT_EQ(RootSystem::build(RootType::kB, 2).positive_roots().size(), 4u);
  EXPECT_EQ(RootSystem::build(RootType::kE8, 8).positive_roots().size(), 120u);
  for (auto type : {RootType::kA, RootType::kB, RootType::kC, RootType::kD, RootType::kE6, RootType::kE7,
                    RootType::kE8, RootType::kF4, RootType::kG2})
    for (int n : admissible_ranks(type)) {
      if (n > 8) continue;
      const auto rs = RootSystem::build(type, n);
      EXPECT_EQ(static_cast<std::int64_t>(rs.positive_roots().size()), expected_positive_roots(type, n)) << rs.name();
    }
}

TEST(RootSystem, Admissibility) {
  EXPECT_THROW(check_admissible(RootType::kD, 2), InvalidArgumentError);
  EXPECT_THROW(check_admissible(RootType::kE8, 9), InvalidArgumentError);
  EXPECT_THROW(check_admissible(RootType::kA, 13), InvalidArgumentError);
  EXPECT_THROW(parse_root_type("E"), InvalidArgumentError);
  EXPECT_EQ(parse_root_type("e7"), RootType::kE7);
}

TEST(RootSystem, FundamentalWeightsAreDual) {
  for (auto [type, n] : {std::pair{RootType::kF4, 4}, {RootType::kG2, 2}, {RootType::kC, 4}}) {
    const auto rs = RootSystem::build(type, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        EXPECT_EQ(rs.coroot_pairing(rs.fundamental_weights()[i], rs.simple_roots()[j]), Rational(i == j ? 1 : 0));
  }
}

TEST(RootSystem, ShortRootsHaveLengthTwo) {
  for (auto [type, n] : {std::pair{RootType::kB, 3}, {RootType::kC, 3}, {RootType::kG2, 2}, {RootType::kF4, 4}}) {
    const auto rs = RootSystem::build(type, n);
    Rational shortest = rs.inner(rs.positive_roots()[0], rs.positive_roots()[0]);
    for (const auto& r : rs.positive_roots()) shortest = std::min(shortest, rs.inner(r, r));
    EXPECT_EQ(shortest, Rational(2));
  }
}

TEST(WeylDimension, Examples) {
  const auto a1 = RootSystem::build(RootType::kA, 1);
  EXPECT_EQ(weyl_dimension(a1, {0}), 1);
  for (std::int64_t m = 0; m <= 200; ++m) EXPECT_EQ(weyl_dimension(a1, {m}), m + 1);
  EXPECT_EQ(weyl_dimension(RootSystem::build(RootType::kA, 2), {1, 1}), 8);
  EXPECT_EQ(weyl_dimension(RootSystem::build(RootType::kG2, 2), {1, 0}) *
                weyl_dimension(RootSystem::build(RootType::kG2, 2), {0, 1}),
            7 * 14);
  EXPECT_EQ(weyl_dimension(RootSystem::build(RootType::kE8, 8), {0, 0, 0, 0, 0, 0, 0, 1}) +
                weyl_dimension(RootSystem::build(RootType::kE8, 8), {1, 0, 0, 0, 0, 0, 0, 0}),
            248 + 3875);
  EXPECT_THROW(weyl_dimension(a1, {-1}), InvalidArgumentError);
}

TEST(WeylDimension, ExteriorPowers) {
  for (int n = 1; n <= 6; ++n) {
    const auto rs = RootSystem::build(RootType::kA, n);
    BigInt binom = 1;
    for (int i = 1; i <= n; ++i) {
      binom = binom * (n + 2 - i) / i;
      std::vector<std::int64_t> w(n, 0);
      w[i - 1] = 1;
      EXPECT_EQ(weyl_dimension(rs, w), binom) << n << " " << i;
    }
  }
}

TEST(ExponentA, TableEntries) {
  EXPECT_EQ(exponent_A(RootSystem::build(RootType::kA, 1)), Rational(2));
  EXPECT_EQ(exponent_A(RootSystem::build(RootType::kG2, 2)), Rational(4, 3));
  EXPECT_EQ(exponent_A(RootSystem::build(RootType::kE8, 8)), Rational(16, 15));
  for (auto type : {RootType::kA, RootType::kB, RootType::kC, RootType::kD})
    for (int n : admissible_ranks(type)) {
      const auto a = exponent_A(RootSystem::build(type, n));
      EXPECT_EQ(a, table_exponent(type, n));
      EXPECT_LE(a, Rational(2));
    }
}

TEST(RootsLemma, Examples) {
  const auto a3 = RootSystem::build(RootType::kA, 3);
  const auto rep = verify_roots_lemma(a3);
  EXPECT_TRUE(rep.pass);
  EXPECT_EQ(rep.bound, Rational(1, 2));
  EXPECT_EQ(rep.worst_ratio, Rational(1, 2));
  EXPECT_TRUE(rep.empty_subset_is_extremal);
  EXPECT_EQ(rep.subsets_checked, 7u);
  const auto e8 = verify_roots_lemma(RootSystem::build(RootType::kE8, 8));
  EXPECT_TRUE(e8.pass);
  EXPECT_EQ(e8.subsets_checked, 255u);
  EXPECT_LE(e8.worst_ratio, Rational(1, 15));
}

TEST(DominantWeights, Balls) {
  const auto a1 = RootSystem::build(RootType::kA, 1);
  EXPECT_EQ(dominant_weights_in_ball(a1, 0.0).size(), 1u);
  EXPECT_EQ(dominant_weights_in_ball(a1, 3.0).size(), 5u);  // m / sqrt 2 <= 3
  // Brute-force lattice scan in R^3.
  auto a2 = dominant_weights_in_ball(RootSystem::build(RootType::kA, 2), 2.0);
  std::sort(a2.begin(), a2.end());
  EXPECT_EQ(a2, (std::vector<std::vector<std::int64_t>>{{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {2, 0}}));
}
