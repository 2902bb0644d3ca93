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

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hw/measure.hpp"

namespace hw {

/// Unit quaternion w + xi + yj + zk, identified with
/// [[w + ix, y + iz], [-y + iz, w - ix]] in SU(2).
class SU2Element {
 public:
  SU2Element() = default;
  /// Normalizes; rejects inputs whose norm is off by more than 1e-6.
  static SU2Element from_quaternion(double w, double x, double y, double z);
  /// Reads a 2x2 matrix of the above shape, checking it is special unitary within 1e-9.
  static SU2Element from_matrix(const Eigen::Matrix2cd& m);
  static SU2Element identity() { return {}; }
  /// exp(theta * (u_x i + u_y j + u_z k)) for a unit axis u.
  static SU2Element exp_axis(double theta, double ux, double uy, double uz);

  double w() const { return w_; }
  double x() const { return x_; }
  double y() const { return y_; }
  double z() const { return z_; }

  SU2Element operator*(const SU2Element& rhs) const;
  SU2Element inverse() const { return raw(w_, -x_, -y_, -z_); }
  Eigen::Matrix2cd matrix() const;
  /// Rotation half-angle arccos(w) in [0, pi].
  double half_angle() const;
  std::string str() const;

 private:
  static SU2Element raw(double w, double x, double y, double z) {
    SU2Element g;
    g.w_ = w;
    g.x_ = x;
    g.y_ = y;
    g.z_ = z;
    return g;
  }
  double w_ = 1.0, x_ = 0.0, y_ = 0.0, z_ = 0.0;
};

/// theta(g h^{-1}); the angle between g and h on S^3.
double su2_distance(const SU2Element& g, const SU2Element& h);

/// pi_m(g), (m+1)x(m+1) unitary, in the orthonormal monomial basis x^{m-j} y^j / sqrt((m-j)! j!).
Eigen::MatrixXcd irrep_matrix(int m, const SU2Element& g);
/// The differential d pi_m(X) for X in sl_2(C), tridiagonal in the same basis.
Eigen::MatrixXcd irrep_differential(int m, const Eigen::Matrix2cd& x);

/// Finitely supported probability measure on SU(2).
class CompactMeasure {
 public:
  CompactMeasure(std::vector<SU2Element> atoms, std::vector<double> weights);
  static CompactMeasure uniform(std::vector<SU2Element> atoms);
  static CompactMeasure delta(const SU2Element& g) { return uniform({g}); }

  const std::vector<SU2Element>& atoms() const { return atoms_; }
  const std::vector<double>& weights() const { return weights_; }
  std::size_t size() const { return atoms_.size(); }
  /// True when the atom multiset is closed under inversion with matching weights (tol 1e-12).
  bool is_symmetric() const;
  CompactMeasure reversed() const;

 private:
  std::vector<SU2Element> atoms_;
  std::vector<double> weights_;
};

/// mu * nu as a finite measure (atoms g h with weight mu(g) nu(h)); near-identical atoms are merged.
CompactMeasure convolve(const CompactMeasure& mu, const CompactMeasure& nu);
/// mu~ * mu.
CompactMeasure symmetrize(const CompactMeasure& mu);

/// pi_m(mu) = sum_g mu(g) pi_m(g).
Eigen::MatrixXcd irrep_operator(int m, const CompactMeasure& mu);
/// Largest singular value of pi_m(mu).
double irrep_operator_norm(int m, const CompactMeasure& mu);

/// |m omega| for the highest weight m omega; short roots have squared length 2, so |omega|^2 = 1/2.
double su2_weight_norm(int m);
/// Largest m with |m omega| <= r.
int su2_max_label(double r);

/// 1 - max_{0 < |m omega| <= r} ||pi_m(mu)||, and 1 when no m qualifies.
double gap_r(const CompactMeasure& mu, double r);

/// Constituents of pi_a (x) pi_b by the Clebsch-Gordan rule.
std::vector<int> tensor_constituents(int a, int b);

struct TensorSupportReport {
  int a = 0, b = 0;
  std::vector<int> constituents;
  bool support_matches = false;      // {|a-b|, ..., a+b} recovered from character products
  bool dimensions_match = false;     // (a+1)(b+1) = sum (c+1)
};

/// Recovers the constituents from sampled character products and compares with the rule.
TensorSupportReport tensor_support_check(int a, int b);

struct ChiRReport {
  double r = 0.0;
  int max_label = 0;           // M(r)
  std::int64_t walk_length = 0;
  std::vector<std::int64_t> multiplicities;  // of chi_c in (sum_{m<=M} chi_m)^2, c = 0..2M
  double value = 0.0;          // chi_r(mu^{*(l)})
  double haar_limit = 0.0;     // multiplicity of chi_0 divided by r
  std::optional<double> e_bound;
  std::optional<bool> below_bound;
};

inline constexpr int kChiRMaxDimension = 400;

/// chi_r(mu^{*(l)}) with l given explicitly. Nonsymmetric mu is symmetrized first.
ChiRReport chi_r_trace_at(const CompactMeasure& mu, double r, std::int64_t l, std::optional<double> e_bound = {},
                          int max_dimension = kChiRMaxDimension);
/// Same with l = l_r from the schedule evaluated at x = r (requires r >= e).
ChiRReport chi_r_trace(const CompactMeasure& mu, double r, const WalkSchedule& schedule,
                       std::optional<double> e_bound = {}, int max_dimension = kChiRMaxDimension);

struct PositivityRow {
  int m;
  double trace;          // tr pi_m(nu * nu)
  double frobenius_sq;   // ||pi_m(nu)||_F^2
};

struct PositivityReport {
  std::vector<PositivityRow> rows;
  double min_trace = 0.0;
  double max_identity_error = 0.0;
  bool pass = false;
};

PositivityReport positivity_check(const CompactMeasure& nu, const std::vector<int>& ms);

struct ApproxIdentityRow {
  double r = 0.0;
  int power = 0;               // k = floor(r / r0)
  double log_c = 0.0;          // log c_r (exact)
  double integral = 0.0;       // Monte Carlo estimate of int f_r
  double integral_se = 0.0;
  double l2_norm = 0.0;        // Monte Carlo
  double l2_norm_exact = 0.0;  // from the closed-form moments
  double distance_integral = 0.0;
  double distance_integral_se = 0.0;
  double distance_integral_reference = 0.0;  // one-dimensional quadrature over the class function
  std::size_t samples = 0;
  bool normalized = false;     // |integral - 1| <= 3 se
};

struct ApproxIdentityReport {
  std::vector<ApproxIdentityRow> rows;
  double r0 = 0.0;
  double distance_slope = 0.0;
  double l2_slope = 0.0;
  bool pass = false;  // normalization, slope -0.5 +- 0.15, L2 slope <= 0.85
};

/// f_r(g) = c_r (chi(g) + 2)^{floor(r / r0)} with chi the defining character and r0 = |omega|.
ApproxIdentityReport approx_identity_check(const std::vector<double>& rs, std::size_t samples, std::uint64_t seed,
                                           std::size_t max_samples = 16'000'000);

/// Least-squares slope of ys against xs.
double regression_slope(const std::vector<double>& xs, const std::vector<double>& ys);

// ---- epsilon-nets ----

struct DiamEpsResult {
  double eps = 0.0;
  std::optional<int> upper;    // every g is eps-close to a product of length <= upper (certified)
  std::optional<int> nominal;  // every net point is eps-close to a kept product
  int depth_cap = 0;
  std::vector<std::size_t> kept_per_level;
  std::size_t test_points = 0;
};

inline constexpr int kDiamEpsDepthCap = 64;

/// Word-length needed for S^l to be eps-dense. Products are snapped to cells of diameter eps/4;
/// density is tested on a net whose covering radius is eps/4.
DiamEpsResult diam_eps(const std::vector<SU2Element>& gates, double eps, int depth_cap = kDiamEpsDepthCap);

/// Volume bound: an eps-dense set has at least 2 pi / (2 eps - sin 2 eps) points.
double covering_number_lower_bound(double eps);

struct SKFitRow {
  double eps;
  int length;        // upper when certified, otherwise nominal
  bool certified;
  int counting_lower_bound;
};

struct SKFitReport {
  std::vector<SKFitRow> rows;
  double exponent = 0.0;        // b in l ~ a log^b(1/eps)
  double exponent_stderr = 0.0;
  double prefactor = 0.0;
  bool degenerate = false;
  bool nondecreasing = false;
  bool above_counting_bound = false;
  bool pass = false;            // b <= 3.5 plus the two checks above
};

SKFitReport solovay_kitaev_fit(const std::vector<SU2Element>& gates, const std::vector<double>& eps_grid,
                               int depth_cap = kDiamEpsDepthCap);

/// {1} u {(1 +- 2i)/sqrt5, (1 +- 2j)/sqrt5, (1 +- 2k)/sqrt5}.
std::vector<SU2Element> five_adic_gates();

}  // namespace hw
