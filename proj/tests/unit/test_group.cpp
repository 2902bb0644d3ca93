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

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <set>

#include "hw/group.hpp"

using namespace hw;

TEST(GroupTable, SpecialLinearOrders) {
  // Brute-force enumeration of all 2x2 matrices with determinant one.
  EXPECT_EQ(GroupTable::special_linear(2, 2).order(), 6u);
  EXPECT_EQ(GroupTable::special_linear(2, 3).order(), 24u);
  EXPECT_EQ(GroupTable::special_linear(2, 4).order(), 48u);
  EXPECT_EQ(GroupTable::special_linear(2, 5).order(), 120u);
  EXPECT_EQ(GroupTable::special_linear(3, 2).order(), 168u);
  EXPECT_EQ(special_linear_order(2, 15), 24u * 120u);
  EXPECT_EQ(special_linear_order(2, 8), 384u);
}

TEST(GroupTable, RejectsBadModulus) {
  EXPECT_THROW(GroupTable::special_linear(2, 1), InvalidArgumentError);
  EXPECT_THROW(GroupTable::special_linear(5, 3), InvalidArgumentError);
  EXPECT_THROW(GroupTable::cyclic(1), InvalidArgumentError);
}

TEST(GroupTable, CapIsEnforced) {
  try {
    GroupTable::special_linear(2, 64, 1000);
    FAIL() << "expected a cap error";
  } catch (const CapExceededError& e) {
    EXPECT_EQ(e.cap(), 1000u);
    EXPECT_GT(e.order(), 1000u);
  }
}

TEST(GroupTable, IdentityFirstAndInverses) {
  const auto t = GroupTable::special_linear(2, 5);
  EXPECT_EQ(t.element(0), ModMatrix::identity(2, 5));
  for (ElementIndex g = 0; g < t.order(); ++g) {
    EXPECT_EQ(t.multiply(g, t.invert(g)), GroupTable::identity());
    EXPECT_EQ(t.multiply(GroupTable::identity(), g), g);
  }
}

TEST(GroupTable, Associativity) {
  const auto t = GroupTable::special_linear(2, 4);
  for (ElementIndex a = 0; a < t.order(); a += 5)
    for (ElementIndex b = 0; b < t.order(); b += 3)
      for (ElementIndex c = 0; c < t.order(); c += 7)
        EXPECT_EQ(t.multiply(t.multiply(a, b), c), t.multiply(a, t.multiply(b, c)));
}

TEST(GroupTable, ActionsArePermutations) {
  const auto t = GroupTable::special_linear(2, 3);
  for (auto s : t.generator_indices()) {
    auto r = t.right_action(s), l = t.left_action(s);
    for (ElementIndex i = 0; i < t.order(); ++i) {
      EXPECT_EQ(r[i], t.multiply(i, s));
      EXPECT_EQ(l[i], t.multiply(s, i));
    }
    std::sort(r.begin(), r.end());
    EXPECT_EQ(std::adjacent_find(r.begin(), r.end()), r.end());
  }
}

TEST(GroupTable, CyclicIndexing) {
  const auto t = GroupTable::cyclic(17);
  ASSERT_EQ(t.order(), 17u);
  for (ElementIndex k = 0; k < 17; ++k) EXPECT_EQ(t.multiply(k, 1), (k + 1) % 17);
}

TEST(GroupTable, SmallSymmetricGroups) {
  EXPECT_EQ(GroupTable::symmetric(3).order(), 6u);
  EXPECT_EQ(GroupTable::symmetric(4).order(), 24u);
  EXPECT_THROW(GroupTable::symmetric(5), InvalidArgumentError);
}

TEST(Subgroups, Closure) {
  const auto t = GroupTable::special_linear(2, 3);
  const ElementIndex id = GroupTable::identity();
  EXPECT_EQ(subgroup_closure(t, std::span(&id, 1)).elements, std::vector<ElementIndex>{0});
  const auto gens = t.generator_indices();
  const auto all = subgroup_closure(t, gens);
  EXPECT_TRUE(all.is_whole_group);
  EXPECT_EQ(all.elements.size(), 24u);

  const auto t5 = GroupTable::special_linear(2, 5);
  const std::vector<std::int64_t> minus{-1, 0, 0, -1};
  const ElementIndex m = t5.index_of(ModMatrix::from_integers(2, 5, minus));
  EXPECT_EQ(subgroup_closure(t5, std::span(&m, 1)).elements.size(), 2u);
}

TEST(Subgroups, CenterAndDerived) {
  const auto t = GroupTable::special_linear(2, 3);
  const auto z = center(t);
  EXPECT_EQ(z.size(), 2u);
  EXPECT_TRUE(is_normal_subgroup(t, z));
  EXPECT_EQ(derived_subgroup(t).size(), 8u);  // quaternion group Q8
  const auto s3 = GroupTable::symmetric(3);
  EXPECT_EQ(center(s3).size(), 1u);
  const auto a3 = derived_subgroup(s3);
  EXPECT_EQ(a3.size(), 3u);
  EXPECT_TRUE(is_normal_subgroup(s3, a3));
  for (ElementIndex g = 1; g < s3.order(); ++g) {
    if (element_order(s3, g) != 2) continue;
    const auto h = subgroup_closure(s3, std::span(&g, 1)).elements;
    EXPECT_EQ(h.size(), 2u);
    EXPECT_FALSE(is_normal_subgroup(s3, h));
  }
}

TEST(Subgroups, ElementOrders) {
  const auto t = GroupTable::special_linear(2, 5);
  std::set<std::uint64_t> orders;
  for (ElementIndex g = 0; g < t.order(); ++g) orders.insert(element_order(t, g));
  EXPECT_EQ(orders, (std::set<std::uint64_t>{1, 2, 3, 4, 5, 6, 10}));
}

TEST(Quotients, FibersAndSurjectivity) {
  const auto t4 = GroupTable::special_linear(2, 4);
  const auto t2 = GroupTable::special_linear(2, 2);
  const auto q = QuotientMap::reduce(t4, t2);
  std::vector<int> fiber(t2.order(), 0);
  for (auto c : q.image) ++fiber[c];
  for (int f : fiber) EXPECT_EQ(f, 8);

  const auto t15 = GroupTable::special_linear(2, 15);
  const auto t5 = GroupTable::special_linear(2, 5);
  const auto q5 = QuotientMap::reduce(t15, t5);
  std::set<ElementIndex> image(q5.image.begin(), q5.image.end());
  EXPECT_EQ(image.size(), 120u);

  const auto same = QuotientMap::reduce(t5, t5);
  for (ElementIndex i = 0; i < t5.order(); ++i) EXPECT_EQ(same(i), i);
  EXPECT_THROW(QuotientMap::reduce(t5, GroupTable::special_linear(2, 3)), InvalidArgumentError);
}

TEST(Quotients, Homomorphism) {
  const auto t = GroupTable::special_linear(2, 9);
  const auto c = GroupTable::special_linear(2, 3);
  const auto q = QuotientMap::reduce(t, c);
  for (ElementIndex a = 0; a < t.order(); a += 13)
    for (ElementIndex b = 0; b < t.order(); b += 17) EXPECT_EQ(q(t.multiply(a, b)), c.multiply(q(a), q(b)));
}

TEST(GenSets, StandardSetsAreSymmetric) {
  for (const char* which : {"std", "alt"}) {
    for (const auto& t : {GroupTable::special_linear(2, 7), GroupTable::cyclic(17), GroupTable::symmetric(4)}) {
      const auto s = GenSet::from_matrices(t, standard_generators(t, which), false);
      EXPECT_TRUE(s.symmetric) << t.name() << " " << which;
      EXPECT_TRUE(s.contains_identity);
      EXPECT_TRUE(subgroup_closure(t, s.members).is_whole_group) << t.name() << " " << which;
    }
  }
}

TEST(Factorize, Basic) {
  EXPECT_EQ(factorize(360), (std::vector<std::pair<std::uint64_t, int>>{{2, 3}, {3, 2}, {5, 1}}));
  EXPECT_TRUE(factorize(1).empty());
}

TEST(Cache, RoundTrip) {
  const auto t = GroupTable::special_linear(2, 7);
  const auto path = (std::filesystem::temp_directory_path() / "hw_cache_roundtrip.bin").string();
  save_table(t, path);
  const auto u = load_table(path);
  std::remove(path.c_str());
  ASSERT_EQ(u.order(), t.order());
  for (ElementIndex i = 0; i < t.order(); ++i) EXPECT_EQ(u.element(i), t.element(i));
  EXPECT_EQ(u.multiply(3, 5), t.multiply(3, 5));
}
