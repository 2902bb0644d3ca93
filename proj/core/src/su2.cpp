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

#include "hw/su2.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>

namespace hw {
namespace {

using cd = std::complex<double>;
constexpr cd kI{0.0, 1.0};

double log_binomial(int n, int k) { return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0); }

// log E_Haar[(chi + 2)^k] = log sum_{j even} C(k, j) 2^{k-j} Catalan(j/2).
double log_moment(int k) {
  std::vector<double> terms;
  for (int j = 0; j <= k; j += 2) {
    const int h = j / 2;
    const double log_catalan = log_binomial(2 * h, h) - std::log(h + 1.0);
    terms.push_back(log_binomial(k, j) + (k - j) * std::numbers::ln2 + log_catalan);
  }
  const double top = *std::max_element(terms.begin(), terms.end());
  double s = 0.0;
  for (double t : terms) s += std::exp(t - top);
  return top + std::log(s);
}

}  // namespace

SU2Element SU2Element::from_quaternion(double w, double x, double y, double z) {
  const double n = std::sqrt(w * w + x * x + y * y + z * z);
  if (!(std::abs(n - 1.0) <= 1e-6))
    throw InvalidArgumentError("quaternion norm " + std::to_string(n) + " is not 1");
  return raw(w / n, x / n, y / n, z / n);
}

SU2Element SU2Element::from_matrix(const Eigen::Matrix2cd& m) {
  const cd a = m(0, 0), b = m(0, 1);
  if (std::abs(m(1, 0) + std::conj(b)) > 1e-9 || std::abs(m(1, 1) - std::conj(a)) > 1e-9)
    throw InvalidArgumentError("matrix is not of the form [[a, b], [-conj b, conj a]]");
  return from_quaternion(a.real(), a.imag(), b.real(), b.imag());
}

SU2Element SU2Element::exp_axis(double theta, double ux, double uy, double uz) {
  const double n = std::sqrt(ux * ux + uy * uy + uz * uz);
  if (!(n > 0)) throw InvalidArgumentError("rotation axis must be nonzero");
  const double s = std::sin(theta) / n;
  return from_quaternion(std::cos(theta), s * ux, s * uy, s * uz);
}

SU2Element SU2Element::operator*(const SU2Element& q) const {
  const double w = w_ * q.w_ - x_ * q.x_ - y_ * q.y_ - z_ * q.z_;
  const double x = w_ * q.x_ + x_ * q.w_ + y_ * q.z_ - z_ * q.y_;
  const double y = w_ * q.y_ - x_ * q.z_ + y_ * q.w_ + z_ * q.x_;
  const double z = w_ * q.z_ + x_ * q.y_ - y_ * q.x_ + z_ * q.w_;
  const double n = std::sqrt(w * w + x * x + y * y + z * z);
  return raw(w / n, x / n, y / n, z / n);
}

Eigen::Matrix2cd SU2Element::matrix() const {
  Eigen::Matrix2cd m;
  m << cd(w_, x_), cd(y_, z_), cd(-y_, z_), cd(w_, -x_);
  return m;
}

double SU2Element::half_angle() const { return std::acos(std::clamp(w_, -1.0, 1.0)); }

std::string SU2Element::str() const {
  std::ostringstream os;
  os.precision(17);
  os << "(" << w_ << ", " << x_ << ", " << y_ << ", " << z_ << ")";
  return os.str();
}

double su2_distance(const SU2Element& g, const SU2Element& h) {
  const double dot = g.w() * h.w() + g.x() * h.x() + g.y() * h.y() + g.z() * h.z();
  return std::acos(std::clamp(dot, -1.0, 1.0));
}

Eigen::MatrixXcd irrep_differential(int m, const Eigen::Matrix2cd& x) {
  if (m < 0) throw InvalidArgumentError("irrep label must be nonnegative");
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(m + 1, m + 1);
  for (int j = 0; j <= m; ++j) {
    a(j, j) = x(0, 0) * static_cast<double>(m - j) + x(1, 1) * static_cast<double>(j);
    if (j < m) a(j + 1, j) = x(1, 0) * std::sqrt(static_cast<double>(m - j) * (j + 1));
    if (j > 0) a(j - 1, j) = x(0, 1) * std::sqrt(static_cast<double>(m - j + 1) * j);
  }
  return a;
}

Eigen::MatrixXcd irrep_matrix(int m, const SU2Element& g) {
  if (m < 0) throw InvalidArgumentError("irrep label must be nonnegative");
  const double vn = std::sqrt(g.x() * g.x() + g.y() * g.y() + g.z() * g.z());
  if (vn == 0.0) {
    const double s = (g.w() < 0 && m % 2 == 1) ? -1.0 : 1.0;
    return Eigen::MatrixXcd::Identity(m + 1, m + 1) * s;
  }
  const double theta = std::atan2(vn, g.w());
  const double ux = g.x() / vn, uy = g.y() / vn, uz = g.z() / vn;
  // H = -i d pi(U) is Hermitian tridiagonal with eigenvalues m - 2j.
  const int n = m + 1;
  Eigen::VectorXd diag(n), off(std::max(0, n - 1));
  std::vector<cd> phase(static_cast<std::size_t>(n), cd(1.0, 0.0));
  const cd lower(uz, uy);  // H(j+1, j)
  for (int j = 0; j < n; ++j) {
    diag(j) = ux * (m - 2 * j);
    if (j + 1 < n) {
      const cd b = lower * std::sqrt(static_cast<double>(m - j) * (j + 1));
      off(j) = std::abs(b);
      phase[static_cast<std::size_t>(j) + 1] = off(j) > 0 ? phase[static_cast<std::size_t>(j)] * b / off(j)
                                                          : phase[static_cast<std::size_t>(j)];
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, off, Eigen::ComputeEigenvectors);
  Eigen::MatrixXcd v = es.eigenvectors().cast<cd>();
  for (int j = 0; j < n; ++j) v.row(j) *= phase[static_cast<std::size_t>(j)];
  // Eigenvalues are exactly -m, -m+2, ..., m in ascending order.
  Eigen::VectorXcd e(n);
  for (int k = 0; k < n; ++k) e(k) = std::exp(kI * (theta * (2 * k - m)));
  return v * e.asDiagonal() * v.adjoint();
}

CompactMeasure::CompactMeasure(std::vector<SU2Element> atoms, std::vector<double> weights)
    : atoms_(std::move(atoms)), weights_(std::move(weights)) {
  if (atoms_.empty() || atoms_.size() != weights_.size())
    throw InvalidArgumentError("compact measure needs matching nonempty atoms and weights");
  double s = 0.0;
  for (double w : weights_) {
    if (!(w >= 0)) throw InvalidArgumentError("compact measure weights must be nonnegative");
    s += w;
  }
  if (std::abs(s - 1.0) > 1e-12) throw InvalidArgumentError("compact measure weights sum to " + std::to_string(s));
}

CompactMeasure CompactMeasure::uniform(std::vector<SU2Element> atoms) {
  std::vector<double> w(atoms.size(), atoms.empty() ? 0.0 : 1.0 / static_cast<double>(atoms.size()));
  return CompactMeasure(std::move(atoms), std::move(w));
}

bool CompactMeasure::is_symmetric() const {
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    const SU2Element inv = atoms_[i].inverse();
    double mass_inv = 0.0, mass = 0.0;
    for (std::size_t j = 0; j < atoms_.size(); ++j) {
      if (su2_distance(atoms_[j], inv) < 1e-12) mass_inv += weights_[j];
      if (su2_distance(atoms_[j], atoms_[i]) < 1e-12) mass += weights_[j];
    }
    if (std::abs(mass - mass_inv) > 1e-12) return false;
  }
  return true;
}

CompactMeasure CompactMeasure::reversed() const {
  std::vector<SU2Element> inv;
  for (const auto& g : atoms_) inv.push_back(g.inverse());
  return CompactMeasure(std::move(inv), weights_);
}

CompactMeasure convolve(const CompactMeasure& mu, const CompactMeasure& nu) {
  std::vector<SU2Element> atoms;
  std::vector<double> weights;
  for (std::size_t i = 0; i < mu.size(); ++i)
    for (std::size_t j = 0; j < nu.size(); ++j) {
      const SU2Element g = mu.atoms()[i] * nu.atoms()[j];
      const double w = mu.weights()[i] * nu.weights()[j];
      auto it = std::find_if(atoms.begin(), atoms.end(), [&](const SU2Element& h) { return su2_distance(g, h) < 1e-12; });
      if (it == atoms.end()) {
        atoms.push_back(g);
        weights.push_back(w);
      } else {
        weights[static_cast<std::size_t>(it - atoms.begin())] += w;
      }
    }
  const double s = std::accumulate(weights.begin(), weights.end(), 0.0);
  for (double& w : weights) w /= s;
  return CompactMeasure(std::move(atoms), std::move(weights));
}

CompactMeasure symmetrize(const CompactMeasure& mu) { return convolve(mu.reversed(), mu); }

Eigen::MatrixXcd irrep_operator(int m, const CompactMeasure& mu) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(m + 1, m + 1);
  for (std::size_t i = 0; i < mu.size(); ++i) out += mu.weights()[i] * irrep_matrix(m, mu.atoms()[i]);
  return out;
}

double irrep_operator_norm(int m, const CompactMeasure& mu) {
  const Eigen::MatrixXcd a = irrep_operator(m, mu);
  const Eigen::MatrixXcd h = a.adjoint() * a;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (h + h.adjoint()), Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

double su2_weight_norm(int m) { return m / std::numbers::sqrt2; }

int su2_max_label(double r) {
  if (!(r >= 0)) throw InvalidArgumentError("r must be nonnegative");
  int m = static_cast<int>(std::floor(r * std::numbers::sqrt2));
  // Exact test m^2 <= 2 r^2 guards the floor against rounding.
  while (m > 0 && static_cast<double>(m) * m > 2.0 * r * r) --m;
  while (static_cast<double>(m + 1) * (m + 1) <= 2.0 * r * r) ++m;
  return m;
}

double gap_r(const CompactMeasure& mu, double r) {
  const int top = su2_max_label(r);
  double worst = 0.0;
  for (int m = 1; m <= top; ++m) worst = std::max(worst, irrep_operator_norm(m, mu));
  return 1.0 - worst;
}

std::vector<int> tensor_constituents(int a, int b) {
  if (a < 0 || b < 0) throw InvalidArgumentError("irrep labels must be nonnegative");
  std::vector<int> out;
  for (int c = std::abs(a - b); c <= a + b; c += 2) out.push_back(c);
  return out;
}

TensorSupportReport tensor_support_check(int a, int b) {
  TensorSupportReport rep;
  rep.a = a;
  rep.b = b;
  rep.constituents = tensor_constituents(a, b);
  // Multiplicity of chi_c in chi_a chi_b = (1/pi) int_0^{2pi} chi_a chi_b chi_c sin^2; the integrand is a
  // trigonometric polynomial of degree <= 2(a + b) + 2, so an equispaced rule with more nodes is exact.
  const int nodes = 2 * (a + b) + 8;
  auto chi = [](int m, double t) {
    const double s = std::sin(t);
    return std::abs(s) < 1e-300 ? (m + 1.0) * (std::cos(t) > 0 ? 1.0 : ((m % 2) ? -1.0 : 1.0))
                                : std::sin((m + 1) * t) / s;
  };
  std::vector<int> recovered;
  bool integral = true;
  for (int c = 0; c <= a + b + 2; ++c) {
    double s = 0.0;
    for (int k = 0; k < nodes; ++k) {
      const double t = 2.0 * std::numbers::pi * k / nodes;
      const double sn = std::sin(t);
      s += chi(a, t) * chi(b, t) * chi(c, t) * sn * sn;
    }
    const double mult = 2.0 * s / nodes;
    const double rounded = std::round(mult);
    if (std::abs(mult - rounded) > 1e-8) integral = false;
    for (int k = 0; k < static_cast<int>(rounded); ++k) recovered.push_back(c);
  }
  rep.support_matches = integral && recovered == rep.constituents;
  std::int64_t dims = 0;
  for (int c : rep.constituents) dims += c + 1;
  rep.dimensions_match = dims == static_cast<std::int64_t>(a + 1) * (b + 1);
  return rep;
}

ChiRReport chi_r_trace_at(const CompactMeasure& mu_in, double r, std::int64_t l, std::optional<double> e_bound,
                          int max_dimension) {
  if (!(r > 0)) throw InvalidArgumentError("chi_r needs r > 0");
  if (l < 0) throw InvalidArgumentError("walk length must be nonnegative");
  const CompactMeasure mu = mu_in.is_symmetric() ? mu_in : symmetrize(mu_in);
  ChiRReport rep;
  rep.r = r;
  rep.walk_length = l;
  rep.e_bound = e_bound;
  rep.max_label = su2_max_label(r);
  const int top = 2 * rep.max_label;
  if (top + 1 > max_dimension)
    throw InvalidArgumentError("chi_r at r = " + std::to_string(r) + " needs dimension " + std::to_string(top + 1) +
                               " above the cap " + std::to_string(max_dimension));
  rep.multiplicities.assign(static_cast<std::size_t>(top) + 1, 0);
  for (int a = 0; a <= rep.max_label; ++a)
    for (int b = 0; b <= rep.max_label; ++b)
      for (int c : tensor_constituents(a, b)) ++rep.multiplicities[static_cast<std::size_t>(c)];

  double total = 0.0;
  for (int c = 0; c <= top; ++c) {
    const auto mult = rep.multiplicities[static_cast<std::size_t>(c)];
    if (mult == 0) continue;
    double tr = 0.0;
    if (l == 0) {
      tr = c + 1.0;
    } else {
      const Eigen::MatrixXcd a = irrep_operator(c, mu);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (a + a.adjoint()), Eigen::EigenvaluesOnly);
      for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k)
        tr += std::pow(es.eigenvalues()(k), static_cast<double>(l));
    }
    total += static_cast<double>(mult) * tr;
  }
  rep.value = total / r;
  rep.haar_limit = static_cast<double>(rep.multiplicities[0]) / r;
  if (e_bound) rep.below_bound = rep.value <= *e_bound;
  return rep;
}

ChiRReport chi_r_trace(const CompactMeasure& mu, double r, const WalkSchedule& schedule, std::optional<double> e_bound,
                       int max_dimension) {
  return chi_r_trace_at(mu, r, walk_length(schedule, r), e_bound, max_dimension);
}

PositivityReport positivity_check(const CompactMeasure& nu, const std::vector<int>& ms) {
  if (!nu.is_symmetric()) throw InvalidArgumentError("positivity check needs a symmetric measure");
  PositivityReport rep;
  const CompactMeasure square = convolve(nu, nu);
  rep.min_trace = std::numeric_limits<double>::infinity();
  for (int m : ms) {
    const Eigen::MatrixXcd p = irrep_operator(m, nu);
    const double tr = irrep_operator(m, square).trace().real();
    const double fro = p.squaredNorm();
    rep.rows.push_back({m, tr, fro});
    rep.min_trace = std::min(rep.min_trace, tr);
    rep.max_identity_error = std::max(rep.max_identity_error, std::abs(tr - fro));
  }
  rep.pass = rep.min_trace >= -1e-10 && rep.max_identity_error <= 1e-10 * std::max<std::size_t>(1, ms.size()) + 1e-10;
  return rep;
}

double regression_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  const auto n = static_cast<double>(xs.size());
  if (xs.size() < 2 || xs.size() != ys.size()) throw InvalidArgumentError("regression needs at least two points");
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  if (sxx == 0.0) throw InvalidArgumentError("regression abscissae are all equal");
  return sxy / sxx;
}

ApproxIdentityReport approx_identity_check(const std::vector<double>& rs, std::size_t samples, std::uint64_t seed,
                                           std::size_t max_samples) {
  ApproxIdentityReport rep;
  rep.r0 = su2_weight_norm(1);
  for (double r : rs)
    if (!(r >= rep.r0)) throw InvalidArgumentError("approximate identity needs r >= r0 = 1/sqrt(2)");

  struct Setup {
    double r;
    int k;
    double log_c;
  };
  std::vector<Setup> setups;
  for (double r : rs) {
    const int k = static_cast<int>(std::floor(r / rep.r0 + 1e-12));
    setups.push_back({r, k, -log_moment(k)});
  }

  // Class functions only depend on w = cos(theta); Haar points are normalized Gaussians in R^4.
  std::size_t n = samples;
  std::vector<ApproxIdentityRow> rows;
  for (;;) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    const std::size_t m = setups.size();
    std::vector<double> s1(m, 0.0), s2(m, 0.0), d1(m, 0.0), d2(m, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      const double a = gauss(rng), b = gauss(rng), c = gauss(rng), d = gauss(rng);
      const double w = std::clamp(a / std::sqrt(a * a + b * b + c * c + d * d), -1.0, 1.0);
      const double theta = std::acos(w);
      const double base = std::log(2.0 + 2.0 * w);
      for (std::size_t j = 0; j < m; ++j) {
        const double f = 2.0 + 2.0 * w > 0 ? std::exp(setups[j].log_c + setups[j].k * base) : 0.0;
        s1[j] += f;
        s2[j] += f * f;
        d1[j] += f * theta;
        d2[j] += f * theta * f * theta;
      }
    }
    rows.clear();
    bool noisy = false;
    const double dn = static_cast<double>(n);
    for (std::size_t j = 0; j < m; ++j) {
      ApproxIdentityRow row;
      row.r = setups[j].r;
      row.power = setups[j].k;
      row.log_c = setups[j].log_c;
      row.samples = n;
      row.integral = s1[j] / dn;
      row.integral_se = std::sqrt(std::max(0.0, s2[j] / dn - row.integral * row.integral) / dn);
      row.l2_norm = std::sqrt(s2[j] / dn);
      row.l2_norm_exact = std::exp(row.log_c + 0.5 * log_moment(2 * row.power));
      row.distance_integral = d1[j] / dn;
      row.distance_integral_se =
          std::sqrt(std::max(0.0, d2[j] / dn - row.distance_integral * row.distance_integral) / dn);
      row.normalized = std::abs(row.integral - 1.0) <= 3.0 * row.integral_se;
      if (row.distance_integral_se > 0.05 * row.distance_integral) noisy = true;
      rows.push_back(row);
    }
    if (!noisy || 2 * n > max_samples) break;
    n *= 2;
  }

  // Reference values: int f_r(g) theta(g) dg = (2/pi) int_0^pi f_r(theta) theta sin^2(theta) d theta.
  for (auto& row : rows) {
    const int steps = 20000;
    const double h = std::numbers::pi / steps;
    double s = 0.0;
    for (int i = 0; i <= steps; ++i) {
      const double t = i * h;
      const double base = 2.0 + 2.0 * std::cos(t);
      const double f = base > 0 ? std::exp(row.log_c + row.power * std::log(base)) : 0.0;
      const double wgt = (i == 0 || i == steps) ? 1.0 : (i % 2 ? 4.0 : 2.0);
      s += wgt * f * t * std::sin(t) * std::sin(t);
    }
    row.distance_integral_reference = (2.0 / std::numbers::pi) * s * h / 3.0;
  }

  rep.rows = rows;
  bool normalized = true;
  std::vector<double> lr, ld, ll;
  for (const auto& row : rows) {
    normalized = normalized && row.normalized;
    lr.push_back(std::log(row.r));
    ld.push_back(std::log(row.distance_integral));
    ll.push_back(std::log(row.l2_norm));
  }
  if (rows.size() >= 2) {
    rep.distance_slope = regression_slope(lr, ld);
    rep.l2_slope = regression_slope(lr, ll);
  }
  rep.pass = normalized && rows.size() >= 2 && std::abs(rep.distance_slope + 0.5) <= 0.15 && rep.l2_slope <= 0.85;
  return rep;
}

std::vector<SU2Element> five_adic_gates() {
  const double s = 1.0 / std::sqrt(5.0);
  std::vector<SU2Element> out{SU2Element::identity()};
  for (int axis = 0; axis < 3; ++axis)
    for (int sign : {1, -1}) {
      double v[3] = {0, 0, 0};
      v[axis] = 2.0 * sign * s;
      out.push_back(SU2Element::from_quaternion(s, v[0], v[1], v[2]));
    }
  return out;
}

}  // namespace hw
