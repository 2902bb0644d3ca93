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

#include <cmath>
#include <numbers>
#include <numeric>

#include "hw/characters.hpp"
#include "hw/spectra.hpp"

using namespace hw;

namespace {

Measure standard_measure(const GroupTable& t, const char* which = "std") {
  const auto s = GenSet::from_matrices(t, standard_generators(t, which), false);
  return Measure::uniform_on(t, s.members);
}

}  // namespace

TEST(SpectralGap, UniformIsOne) {
  const auto t = GroupTable::special_linear(2, 3);
  EXPECT_NEAR(spectral_gap(Measure::uniform(t)).gap, 1.0, 1e-12);
}

TEST(SpectralGap, CyclicFourier) {
  // Eigenvalues (1 + 2 cos(2 pi k / n)) / 3.
  EXPECT_NEAR(spectral_gap(standard_measure(GroupTable::cyclic(4))).gap, 2.0 / 3.0, 1e-12);
  EXPECT_NEAR(spectral_gap(standard_measure(GroupTable::cyclic(17))).gap, 0.04501851373042953, 1e-12);
  for (std::uint32_t n : {5u, 101u}) {
    double top = 0.0;
    for (std::uint32_t k = 1; k < n; ++k)
      top = std::max(top, std::abs(1.0 + 2.0 * std::cos(2.0 * std::numbers::pi * k / n)) / 3.0);
    EXPECT_NEAR(spectral_gap(standard_measure(GroupTable::cyclic(n))).gap, 1.0 - top, 1e-12) << n;
  }
}

TEST(SpectralGap, SpecialLinearDenseOracle) {
  EXPECT_NEAR(spectral_gap(standard_measure(GroupTable::special_linear(2, 3))).gap, 0.2535898384862243, 1e-10);
  EXPECT_NEAR(spectral_gap(standard_measure(GroupTable::special_linear(2, 5))).gap, 0.15278640450004144, 1e-10);
  EXPECT_NEAR(spectral_gap(standard_measure(GroupTable::special_linear(2, 7))).gap, 0.1171572875253798, 1e-10);
}

TEST(SpectralGap, IterativeMatchesDense) {
  for (std::uint32_t q : {7u, 11u}) {
    const auto t = GroupTable::special_linear(2, q);
    for (const char* which : {"std", "alt"}) {
      const auto mu = standard_measure(t, which);
      GapOptions dense, iter;
      dense.method = GapOptions::Method::kDense;
      iter.method = GapOptions::Method::kIterative;
      const auto a = spectral_gap(mu, dense), b = spectral_gap(mu, iter);
      EXPECT_EQ(a.method, "dense");
      EXPECT_EQ(b.method, "iterative");
      EXPECT_TRUE(b.converged);
      EXPECT_NEAR(a.gap, b.gap, 1e-8) << q << " " << which;
    }
  }
}

TEST(SpectralGap, NonsymmetricUsesSingularValue) {
  // delta at a generator of Z/5 is unitary: every nontrivial singular value is 1.
  const auto t = GroupTable::cyclic(5);
  EXPECT_NEAR(spectral_gap(Measure::delta(t, 1)).gap, 0.0, 1e-12);
  const auto z7 = GroupTable::cyclic(7);
  const auto mu = random_measure(z7, 4);
  GapOptions dense, iter;
  dense.method = GapOptions::Method::kDense;
  iter.method = GapOptions::Method::kIterative;
  EXPECT_NEAR(spectral_gap(mu, dense).gap, spectral_gap(mu, iter).gap, 1e-8);
}

TEST(RegularTrace, Basics) {
  const auto t = GroupTable::special_linear(2, 5);
  EXPECT_DOUBLE_EQ(regular_trace(Measure::delta(t, 0)), 120.0);
  EXPECT_NEAR(regular_trace(Measure::uniform(t)), 1.0, 1e-12);
}

TEST(RegularTrace, EqualsEigenvalueSum) {
  for (const auto& t : {GroupTable::special_linear(2, 3), GroupTable::symmetric(4), GroupTable::special_linear(2, 8)}) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      const auto nu = random_symmetric_measure(t, seed, 10);
      const auto ev = regular_spectrum(nu);
      EXPECT_NEAR(std::accumulate(ev.begin(), ev.end(), 0.0), regular_trace(nu), 1e-8);
    }
  }
}

TEST(SarnakXue, SmallGroups) {
  const auto t = GroupTable::special_linear(2, 3);
  const auto chars = character_table(t);
  const auto rep = verify_sarnak_xue(standard_measure(t), chars);
  EXPECT_TRUE(rep.pass) << rep.worst_margin;
  EXPECT_FALSE(rep.ambiguous);
  double weighted = 0.0;
  for (const auto& r : rep.rows) weighted += r.multiplicity;
  EXPECT_NEAR(weighted, 24.0, 1e-6);

  const auto z5 = GroupTable::cyclic(5);
  const auto rz = verify_sarnak_xue(random_symmetric_measure(z5, 1, 3), character_table(z5));
  EXPECT_TRUE(rz.pass);
  for (const auto& r : rz.rows) EXPECT_EQ(r.irrep_dim, 1);
}

TEST(SarnakXue, RejectsNonsymmetric) {
  const auto t = GroupTable::special_linear(2, 3);
  EXPECT_THROW(verify_sarnak_xue(random_measure(t, 1), character_table(t)), InvalidArgumentError);
}

TEST(Sandwich, Examples) {
  const auto z17 = GroupTable::cyclic(17);
  const auto rep = folklore_sandwich(z17, GenSet::from_matrices(z17, standard_generators(z17, "std"), false));
  EXPECT_EQ(rep.diameter, 8);
  EXPECT_NEAR(rep.gap, 0.04501851373042953, 1e-12);
  EXPECT_TRUE(rep.pass);

  const auto t = GroupTable::special_linear(2, 3);
  std::vector<ElementIndex> all(t.order());
  std::iota(all.begin(), all.end(), 0);
  const auto whole = folklore_sandwich(t, GenSet::from_indices(t, all));
  EXPECT_EQ(whole.diameter, 1);
  EXPECT_NEAR(whole.gap, 1.0, 1e-12);
  EXPECT_TRUE(whole.pass);

  const auto t7 = GroupTable::special_linear(2, 7);
  EXPECT_TRUE(folklore_sandwich(t7, GenSet::from_matrices(t7, standard_generators(t7, "std"), false)).pass);
}

TEST(GapSymmetrization, Bounds) {
  const auto z5 = GroupTable::cyclic(5);
  const auto d = gap_symmetrization_bounds(Measure::delta(z5, 1));
  EXPECT_TRUE(d.pass);
  const auto u = gap_symmetrization_bounds(Measure::uniform(z5));
  EXPECT_NEAR(u.gap, 1.0, 1e-12);
  EXPECT_NEAR(u.gap_symmetrized, 1.0, 1e-12);
  EXPECT_NEAR(u.middle, 1.0, 1e-7);  // sqrt amplifies rounding in 1 - gap
  const auto t = GroupTable::special_linear(2, 3);
  for (std::uint64_t seed = 0; seed < 5; ++seed) EXPECT_TRUE(gap_symmetrization_bounds(random_measure(t, seed)).pass);
}

TEST(TraceDecay, DegenerateCases) {
  const auto single = QuotientChain::special_linear(2, {5});
  const auto uni = Measure::uniform(single.finest());
  const auto r = trace_decay_experiment(single, uni, {1.0, 2.0}, 2.0);
  ASSERT_EQ(r.rows.size(), 1u);
  EXPECT_NEAR(r.rows[0].trace, 1.0, 1e-9);
  EXPECT_TRUE(r.pass);

  const auto chain = QuotientChain::special_linear(2, {2, 4});
  const auto mu = standard_measure(chain.finest());
  const auto z = trace_decay_experiment(chain, mu, {0.0, 2.0}, 10.0);
  EXPECT_EQ(z.rows[1].walk_length, 0);
  EXPECT_DOUBLE_EQ(z.rows[1].trace, 48.0);
  EXPECT_FALSE(z.pass);
}

TEST(TraceDecay, MemoryCapMarksIncomplete) {
  const auto chain = QuotientChain::special_linear(2, {2, 4, 8});
  const auto r = trace_decay_experiment(chain, standard_measure(chain.finest()), {1.0, 2.0}, std::nullopt, 100);
  EXPECT_FALSE(r.complete);
  EXPECT_FALSE(r.pass);
  EXPECT_FALSE(r.note.empty());
}

TEST(TraceDecay, CalibrationUsesSquarefreeLevels) {
  const auto chain = QuotientChain::special_linear(2, {2, 4});
  const auto mu = standard_measure(chain.finest());
  const double c0 = calibrate_c0(chain, mu, 2.0);
  const auto coarse = pushforward(mu, chain.levels()[0].from_finest, *chain.levels()[0].table);
  const double g = spectral_gap(coarse).gap;
  EXPECT_NEAR(c0, 1.0 / (g * std::pow(std::log(6.0), 2.0)), 1e-12);
}
