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
#include <cmath>
#include <numbers>
#include <random>

#include "hw/characters.hpp"
#include "hw/spectra.hpp"

using namespace hw;

namespace {

std::vector<std::size_t> sorted_sizes(const ConjugacyClasses& c) {
  auto s = c.sizes;
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

TEST(ConjugacyClasses, Examples) {
  const auto z7 = conjugacy_classes(GroupTable::cyclic(7));
  EXPECT_EQ(z7.count(), 7u);
  EXPECT_EQ(sorted_sizes(conjugacy_classes(GroupTable::symmetric(3))), (std::vector<std::size_t>{1, 2, 3}));
  const auto sl3 = conjugacy_classes(GroupTable::special_linear(2, 3));
  EXPECT_EQ(sl3.count(), 7u);
  EXPECT_EQ(sl3.representatives[0], GroupTable::identity());
  EXPECT_EQ(conjugacy_classes(GroupTable::special_linear(2, 5)).count(), 9u);
  EXPECT_EQ(conjugacy_classes(GroupTable::special_linear(2, 7)).count(), 11u);
}

TEST(CharacterTable, CyclicRootsOfUnity) {
  const auto t = GroupTable::cyclic(3);
  const auto chars = character_table(t);
  ASSERT_EQ(chars.num_irreps(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(chars.dim(i), 1);
    const auto v = chars.at_element(i, 1);
    EXPECT_NEAR(std::abs(v), 1.0, 1e-12);
    EXPECT_NEAR(std::abs(v * v * v - 1.0), 0.0, 1e-12);
  }
}

TEST(CharacterTable, Dimensions) {
  // Independent numerical class-matrix oracle.
  EXPECT_EQ(character_table(GroupTable::special_linear(2, 3)).dims(), (std::vector<int>{1, 1, 1, 2, 2, 2, 3}));
  EXPECT_EQ(character_table(GroupTable::special_linear(2, 5)).dims(), (std::vector<int>{1, 2, 2, 3, 3, 4, 4, 5, 6}));
  EXPECT_EQ(character_table(GroupTable::special_linear(2, 7)).dims(),
            (std::vector<int>{1, 3, 3, 4, 4, 6, 6, 6, 7, 8, 8}));
  EXPECT_EQ(character_table(GroupTable::symmetric(4)).dims(), (std::vector<int>{1, 1, 2, 3, 3}));
}

TEST(CharacterTable, Orthogonality) {
  for (const auto& t : {GroupTable::special_linear(2, 5), GroupTable::special_linear(2, 8), GroupTable::special_linear(2, 9),
                        GroupTable::special_linear(3, 2)}) {
    const auto chars = character_table(t);
    EXPECT_LT(chars.row_orthogonality_error(), 1e-8) << t.name();
    EXPECT_LT(chars.column_orthogonality_error(), 1e-8) << t.name();
    int sum = 0;
    for (int d : chars.dims()) sum += d * d;
    EXPECT_EQ(static_cast<std::size_t>(sum), t.order());
  }
}

TEST(CharacterTable, CentralizerAndBoundedness) {
  const auto t = GroupTable::special_linear(2, 7);
  const auto chars = character_table(t);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<ElementIndex> pick(0, static_cast<ElementIndex>(t.order() - 1));
  for (int k = 0; k < 20; ++k) {
    const ElementIndex g = pick(rng);
    double s = 0.0;
    for (std::size_t i = 0; i < chars.num_irreps(); ++i) {
      const auto v = chars.at_element(i, g);
      s += std::norm(v);
      EXPECT_LE(std::abs(v), chars.dim(i) + 1e-9);
    }
    std::size_t centralizer = 0;
    for (ElementIndex h = 0; h < t.order(); ++h) centralizer += t.multiply(g, h) == t.multiply(h, g);
    EXPECT_NEAR(s, static_cast<double>(centralizer), 1e-8);
  }
}

TEST(CharacterTable, ClassCapIsEnforced) {
  DixonOptions o;
  o.class_cap = 5;
  EXPECT_THROW(character_table(GroupTable::special_linear(2, 5), o), CharacterTableError);
}

TEST(Quasirandom, MinimalDimensions) {
  EXPECT_EQ(quasirandom_cert(character_table(GroupTable::special_linear(2, 5)), 1.0 / 3).min_nontrivial_dim, 2);
  EXPECT_EQ(quasirandom_cert(character_table(GroupTable::special_linear(2, 7)), 1.0 / 3).min_nontrivial_dim, 3);
  const auto z = quasirandom_cert(character_table(GroupTable::cyclic(11)), 1.0 / 3);
  EXPECT_EQ(z.min_nontrivial_dim, 1);
  EXPECT_NEAR(z.c, std::pow(11.0, -1.0 / 3), 1e-12);
}

TEST(Quasirandom, KernelsOfSL23) {
  const auto cert = quasirandom_cert(character_table(GroupTable::special_linear(2, 3)), 0.5);
  // The three linear characters factor through Z/3; the 3-dimensional one kills the center.
  int linear_nontrivial = 0;
  for (const auto& r : cert.rows) {
    if (r.dim == 1 && r.kernel_index == 3) ++linear_nontrivial;
    if (r.dim == 3) EXPECT_EQ(r.kernel_order, 2u);
  }
  EXPECT_EQ(linear_nontrivial, 2);
}

TEST(Clifford, SymmetricGroupOverAlternating) {
  const auto s3 = GroupTable::symmetric(3);
  const auto a3 = derived_subgroup(s3);
  std::vector<ElementIndex> support{0};
  for (ElementIndex g = 1; g < s3.order(); ++g)
    if (element_order(s3, g) == 3 || support.size() == 1) support.push_back(g);
  const auto mu = symmetrize(Measure::uniform_on(s3, support));
  const auto rep = clifford_bound_check(s3, a3, mu, 2, 4);
  EXPECT_TRUE(rep.applicable);
  EXPECT_TRUE(rep.pass) << rep.lhs << " vs " << rep.bound;
  EXPECT_EQ(rep.data.orbits.size(), 2u);  // {trivial}, {two nontrivial characters of A3}
}

TEST(Clifford, CenterOfSL23) {
  const auto t = GroupTable::special_linear(2, 3);
  const auto z = center(t);
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const auto rep = clifford_bound_check(t, z, random_symmetric_measure(t, seed, 4), 2, 4);
    EXPECT_TRUE(rep.pass) << rep.note;
  }
}

TEST(Clifford, AbelianCollapse) {
  // All a = d = dim = 1: the bound is |N| M (M)^{(l'-l)/l}.
  const auto t = GroupTable::cyclic(12);
  std::vector<ElementIndex> n{0, 3, 6, 9};
  const auto mu = random_symmetric_measure(t, 5, 3);
  const auto rep = clifford_bound_check(t, n, mu, 2, 4, 3.0);
  if (rep.applicable) {
    EXPECT_NEAR(rep.bound, 4.0 * 3.0 * 3.0, 1e-9);
  } else {
    EXPECT_FALSE(rep.pass);
    EXPECT_FALSE(rep.note.empty());
  }
}

TEST(Clifford, RejectsNonNormal) {
  const auto s3 = GroupTable::symmetric(3);
  ElementIndex g = 1;
  while (element_order(s3, g) != 2) ++g;
  const std::vector<ElementIndex> h{0, g};
  EXPECT_THROW(clifford_bound_check(s3, h, Measure::uniform(s3), 2, 4), InvalidArgumentError);
}
