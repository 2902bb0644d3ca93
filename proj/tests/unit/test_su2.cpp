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
#include <random>

#include "hw/rootsys.hpp"
#include "hw/su2.hpp"

using namespace hw;

namespace {

SU2Element raw_random(std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  double q[4], s = 0.0;
  for (double& x : q) {
    x = n(rng);
    s += x * x;
  }
  s = std::sqrt(s);
  return SU2Element::from_quaternion(q[0] / s, q[1] / s, q[2] / s, q[3] / s);
}

const double kInvSqrt5 = 1.0 / std::sqrt(5.0);

CompactMeasure diagonal_triple() {
  const auto q = SU2Element::from_quaternion(kInvSqrt5, 2 * kInvSqrt5, 0, 0);
  return CompactMeasure::uniform({SU2Element::identity(), q, q.inverse()});
}

}  // namespace

TEST(SU2Element, MetricIsBiInvariant) {
  std::mt19937_64 rng(1);
  for (int k = 0; k < 50; ++k) {
    const auto g = raw_random(rng), h = raw_random(rng), x = raw_random(rng);
    EXPECT_NEAR(su2_distance(g, h), su2_distance(h, g), 1e-12);
    EXPECT_NEAR(su2_distance(x * g, x * h), su2_distance(g, h), 1e-9);
    EXPECT_NEAR(su2_distance(g * x, h * x), su2_distance(g, h), 1e-9);
  }
  EXPECT_NEAR(su2_distance(SU2Element::identity(), SU2Element::from_quaternion(-1, 0, 0, 0)), std::numbers::pi, 1e-12);
}

TEST(SU2Element, MatrixRoundTrip) {
  std::mt19937_64 rng(2);
  for (int k = 0; k < 20; ++k) {
    const auto g = raw_random(rng), h = raw_random(rng);
    EXPECT_LT((g.matrix() * h.matrix() - (g * h).matrix()).norm(), 1e-12);
    EXPECT_NEAR(su2_distance(SU2Element::from_matrix(g.matrix()), g), 0.0, 1e-7);
  }
  EXPECT_THROW(SU2Element::from_quaternion(2, 0, 0, 0), InvalidArgumentError);
}

TEST(Irreps, DefiningAndTrivial) {
  std::mt19937_64 rng(3);
  const auto g = raw_random(rng);
  EXPECT_LT((irrep_matrix(1, g) - g.matrix()).norm(), 1e-12);
  EXPECT_NEAR(std::abs(irrep_matrix(0, g)(0, 0) - 1.0), 0.0, 1e-15);
}

TEST(Irreps, UnitarityHomomorphismCharacter) {
  std::mt19937_64 rng(4);
  for (int m : {2, 5, 17, 64, 127, 200}) {
    for (int k = 0; k < 5; ++k) {
      const auto g = raw_random(rng), h = raw_random(rng);
      const auto pg = irrep_matrix(m, g), ph = irrep_matrix(m, h);
      const auto id = Eigen::MatrixXcd::Identity(m + 1, m + 1);
      EXPECT_LT((pg * pg.adjoint() - id).cwiseAbs().maxCoeff(), 1e-9) << m;
      EXPECT_LT((pg * ph - irrep_matrix(m, g * h)).cwiseAbs().maxCoeff(), 1e-9) << m;
      const double t = g.half_angle();
      EXPECT_NEAR(pg.trace().real(), std::sin((m + 1) * t) / std::sin(t), 1e-9) << m;
      EXPECT_NEAR(pg.trace().imag(), 0.0, 1e-9);
    }
    EXPECT_NEAR(irrep_matrix(m, SU2Element::identity()).trace().real(), m + 1.0, 1e-12);
  }
}

TEST(Irreps, DimensionMatchesWeylFormula) {
  const auto a1 = RootSystem::build(RootType::kA, 1);
  for (int m = 0; m <= 200; m += 7)
    EXPECT_EQ(irrep_matrix(m, SU2Element::identity()).rows(), weyl_dimension(a1, {m}).convert_to<long>());
}

TEST(Irreps, DifferentialMatchesDerivative) {
  const double ux = 0.48, uy = 0.6, uz = 0.64;
  using C = std::complex<double>;
  Eigen::Matrix2cd x;
  x << C(0, ux), C(uy, uz), C(-uy, uz), C(0, -ux);
  const double h = 1e-5;
  const int m = 4;
  const Eigen::MatrixXcd fd =
      (irrep_matrix(m, SU2Element::exp_axis(h, ux, uy, uz)) - irrep_matrix(m, SU2Element::exp_axis(-h, ux, uy, uz))) /
      (2 * h);
  EXPECT_LT((fd - irrep_differential(m, x)).cwiseAbs().maxCoeff(), 1e-6);
}

TEST(IrrepOperator, DiagonalTriple) {
  const auto mu = diagonal_triple();
  const auto op = irrep_operator(1, mu);
  const double v = (1.0 + 2.0 * kInvSqrt5) / 3.0;
  EXPECT_NEAR(std::abs(op(0, 0) - v), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(op(1, 1) - v), 0.0, 1e-14);
  EXPECT_NEAR(irrep_operator_norm(1, mu), 0.6314757303333053, 1e-14);
  EXPECT_NEAR(std::abs(irrep_operator(0, mu)(0, 0) - 1.0), 0.0, 1e-15);
}

TEST(GapR, Examples) {
  const auto mu = diagonal_triple();
  EXPECT_NEAR(gap_r(mu, 1.0), 1.0 - (1.0 + 2.0 / std::sqrt(5.0)) / 3.0, 1e-12);
  EXPECT_EQ(gap_r(mu, 0.5), 1.0);
  EXPECT_EQ(gap_r(CompactMeasure::delta(SU2Element::identity()), 1.0), 0.0);
  double prev = 1.0;
  const auto gates = CompactMeasure::uniform(five_adic_gates());
  for (double r = 0.5; r <= 20.0; r += 0.5) {
    const double g = gap_r(gates, r);
    EXPECT_LE(g, prev);
    prev = g;
  }
  EXPECT_EQ(su2_max_label(3.0), 4);
}

TEST(Tensor, Support) {
  EXPECT_EQ(tensor_constituents(1, 1), (std::vector<int>{0, 2}));
  EXPECT_EQ(tensor_constituents(2, 1), (std::vector<int>{1, 3}));
  for (int a = 0; a <= 40; a += 3)
    for (int b = 0; b <= 40; b += 5) {
      const auto r = tensor_support_check(a, b);
      EXPECT_TRUE(r.support_matches) << a << " " << b;
      EXPECT_TRUE(r.dimensions_match) << a << " " << b;
    }
}

TEST(ChiR, CharacterExpansion) {
  const auto r = chi_r_trace_at(CompactMeasure::delta(SU2Element::identity()), 1.0, 0);
  EXPECT_EQ(r.max_label, 1);
  EXPECT_EQ(r.multiplicities, (std::vector<std::int64_t>{2, 2, 1}));
  EXPECT_NEAR(r.value, 9.0, 1e-12);
  EXPECT_NEAR(r.haar_limit, 2.0, 1e-12);
}

TEST(ChiR, LongWalkApproachesHaarLimit) {
  const auto mu = CompactMeasure::uniform(five_adic_gates());
  const auto r = chi_r_trace_at(mu, 3.0, 4000, 10.0);
  EXPECT_NEAR(r.value, r.haar_limit, 1e-6);
  ASSERT_TRUE(r.below_bound.has_value());
  EXPECT_TRUE(*r.below_bound);
  EXPECT_THROW(chi_r_trace_at(mu, 400.0, 2), InvalidArgumentError);
}

TEST(Positivity, Examples) {
  const auto d = positivity_check(CompactMeasure::delta(SU2Element::identity()), {0, 1, 5});
  EXPECT_TRUE(d.pass);
  EXPECT_NEAR(d.rows[2].trace, 6.0, 1e-12);
  std::mt19937_64 rng(5);
  const auto g = raw_random(rng);
  std::vector<int> ms(101);
  for (int m = 0; m <= 100; ++m) ms[m] = m;
  const auto p = positivity_check(CompactMeasure::uniform({g, g.inverse()}), ms);
  EXPECT_TRUE(p.pass);
  EXPECT_GE(p.min_trace, -1e-10);
  EXPECT_LT(p.max_identity_error, 1e-10);
}

TEST(ApproxIdentity, Normalization) {
  const auto rep = approx_identity_check({2.0, 4.0, 8.0}, 200000, 17);
  for (const auto& row : rep.rows) {
    EXPECT_TRUE(row.normalized) << row.r;
    EXPECT_NEAR(row.l2_norm, row.l2_norm_exact, 0.1 * row.l2_norm_exact);
    EXPECT_NEAR(row.distance_integral, row.distance_integral_reference, 4 * row.distance_integral_se + 1e-3);
  }
  EXPECT_THROW(approx_identity_check({0.1}, 1000, 1), InvalidArgumentError);
}

TEST(DiamEps, WholeGroupWithinReach) {
  const auto r = diam_eps({SU2Element::identity()}, std::numbers::pi + 0.01);
  EXPECT_EQ(r.upper, 0);
  EXPECT_EQ(r.nominal, 0);
}

TEST(DiamEps, CircleSubgroup) {
  // S^l covers angles -l..l on a circle; every point of S^3 lies within pi/2 of the circle,
  // and with l = 2 the remaining angular gap is pi - 2 < 1.6.
  const auto g = SU2Element::from_quaternion(std::cos(1.0), std::sin(1.0), 0, 0);
  const auto r = diam_eps({SU2Element::identity(), g, g.inverse()}, 1.6, 12);
  ASSERT_TRUE(r.nominal.has_value());
  EXPECT_EQ(*r.nominal, 2);
  EXPECT_FALSE(r.upper.has_value());
}

TEST(DiamEps, MonotoneInEps) {
  const auto gates = five_adic_gates();
  int prev = 0;
  for (double eps : {1.0, 0.5, 0.25, 0.12}) {
    const auto r = diam_eps(gates, eps);
    ASSERT_TRUE(r.upper.has_value()) << eps;
    EXPECT_GE(*r.upper, prev);
    EXPECT_LE(*r.nominal, *r.upper);
    prev = *r.upper;
  }
  EXPECT_THROW(diam_eps({five_adic_gates()[1]}, 0.5), InvalidArgumentError);
}

TEST(SolovayKitaev, DegenerateAndValidation) {
  std::mt19937_64 rng(9);
  std::vector<SU2Element> dense{SU2Element::identity()};
  for (int k = 0; k < 3000; ++k) dense.push_back(raw_random(rng));
  const auto fit = solovay_kitaev_fit(dense, {2.0, 1.8, 1.6, 1.4});
  EXPECT_TRUE(fit.degenerate);
  EXPECT_THROW(solovay_kitaev_fit(five_adic_gates(), {0.8, 0.4, 0.2}), InvalidArgumentError);
  EXPECT_THROW(solovay_kitaev_fit(five_adic_gates(), {0.8, 0.4, 0.2, 0.01}), InvalidArgumentError);
}

TEST(SolovayKitaev, CountingBound) {
  EXPECT_NEAR(covering_number_lower_bound(0.1), 2 * std::numbers::pi / (0.2 - std::sin(0.2)), 1e-12);
  EXPECT_EQ(covering_number_lower_bound(4.0), 1.0);
}
