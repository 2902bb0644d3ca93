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

#include "hw/spectra.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "hw/characters.hpp"
#include "hw/diameter.hpp"

namespace hw {
namespace {

constexpr double kSymmetryTol = 1e-14;

// Reg(nu) as a dense matrix: column h holds nu * delta_h.
Eigen::MatrixXd dense_operator(const Measure& nu) {
  const auto n = static_cast<Eigen::Index>(nu.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (auto [s, w] : nu.support()) {
    const auto act = nu.table().left_action(s);
    for (Eigen::Index h = 0; h < n; ++h) m(act[h], h) += w;
  }
  return m;
}

Eigen::VectorXd nontrivial_eigenvalues_dense(const Measure& nu) {
  Eigen::MatrixXd m = dense_operator(nu);
  m.array() -= 1.0 / static_cast<double>(nu.size());
  m = 0.5 * (m + m.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

void project_constants(std::span<double> v) {
  const double mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
  for (double& x : v) x -= mean;
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

struct ExtremeEigen {
  double value = 0.0;
  double residual = 0.0;
  std::size_t steps = 0;
  bool converged = false;
};

// Explicitly restarted Lanczos with full reorthogonalization on the complement of
// the constants. `largest` selects which end of the spectrum.
ExtremeEigen lanczos_extreme(const ConvolutionOperator& op, bool largest, double tol, std::size_t budget,
                             std::mt19937_64& rng) {
  const std::size_t n = op.dimension();
  ExtremeEigen out;
  if (n <= 1) {
    out.converged = true;
    return out;
  }
  const std::size_t memory_dim = std::max<std::size_t>(12, std::min<std::size_t>(64, (std::size_t{1} << 26) / n));
  const std::size_t m = std::min(n - 1, memory_dim);

  std::normal_distribution<double> gauss;
  auto random_start = [&](std::vector<double>& v) {
    for (double& x : v) x = gauss(rng);
    project_constants(v);
    const double nv = norm(v);
    for (double& x : v) x /= nv;
  };

  std::vector<double> start(n);
  random_start(start);
  std::vector<std::vector<double>> basis;
  std::vector<double> w(n);
  double best_residual = std::numeric_limits<double>::infinity();
  int stagnant = 0;

  while (out.steps < budget) {
    basis.assign(1, start);
    std::vector<double> alpha, beta;
    double ritz = 0.0, residual = 0.0;
    Eigen::VectorXd ritz_coeffs;
    bool invariant = false;
    for (std::size_t j = 0; j < m && out.steps < budget; ++j) {
      op.apply(basis[j], w);
      project_constants(w);
      ++out.steps;
      const double a = dot(w, basis[j]);
      alpha.push_back(a);
      for (int pass = 0; pass < 2; ++pass)
        for (const auto& b : basis) {
          const double c = dot(w, b);
          for (std::size_t i = 0; i < n; ++i) w[i] -= c * b[i];
        }
      const double bnorm = norm(w);

      const auto k = static_cast<Eigen::Index>(alpha.size());
      Eigen::VectorXd diag = Eigen::Map<Eigen::VectorXd>(alpha.data(), k);
      Eigen::VectorXd sub = k > 1 ? Eigen::VectorXd(Eigen::Map<Eigen::VectorXd>(beta.data(), k - 1))
                                  : Eigen::VectorXd(0);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
      es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
      const Eigen::Index pick = largest ? k - 1 : 0;
      ritz = es.eigenvalues()(pick);
      ritz_coeffs = es.eigenvectors().col(pick);
      residual = bnorm * std::abs(ritz_coeffs(k - 1));

      if (bnorm < 1e-14 || residual <= tol) {
        invariant = bnorm < 1e-14;
        break;
      }
      beta.push_back(bnorm);
      for (double& x : w) x /= bnorm;
      basis.push_back(w);
    }
    out.value = ritz;
    out.residual = residual;
    if (residual <= tol || invariant) {
      out.converged = true;
      out.residual = std::min(residual, tol);
      return out;
    }
    // Restart from the Ritz vector.
    std::fill(start.begin(), start.end(), 0.0);
    for (Eigen::Index c = 0; c < ritz_coeffs.size(); ++c)
      for (std::size_t i = 0; i < n; ++i) start[i] += ritz_coeffs(c) * basis[c][i];
    if (residual < 0.9 * best_residual) {
      best_residual = residual;
      stagnant = 0;
    } else if (++stagnant >= 4) {
      std::vector<double> kick(n);
      random_start(kick);
      for (std::size_t i = 0; i < n; ++i) start[i] += 1e-3 * kick[i];
      stagnant = 0;
    }
    project_constants(start);
    const double ns = norm(start);
    for (double& x : start) x /= ns;
  }
  return out;
}

GapResult finish(double modulus, std::string method) {
  GapResult r;
  r.top_nontrivial_modulus = std::clamp(modulus, 0.0, 1.0);
  r.gap = 1.0 - r.top_nontrivial_modulus;
  r.method = std::move(method);
  return r;
}

}  // namespace

GapResult spectral_gap(const Measure& mu, const GapOptions& options) {
  const std::size_t n = mu.size();
  const bool symmetric = mu.is_symmetric(kSymmetryTol);
  const Measure nu = symmetric ? mu : symmetrize(mu);

  const bool dense = options.method == GapOptions::Method::kDense ||
                     (options.method == GapOptions::Method::kAuto && n <= kDenseSpectrumMaxOrder);
  if (dense) {
    if (n > kDenseSpectrumMaxOrder && options.method == GapOptions::Method::kDense)
      throw InvalidArgumentError("dense gap limited to order " + std::to_string(kDenseSpectrumMaxOrder));
    const Eigen::VectorXd ev = nontrivial_eigenvalues_dense(nu);
    double modulus = 0.0;
    if (symmetric) {
      modulus = std::max(std::abs(ev.minCoeff()), std::abs(ev.maxCoeff()));
    } else {
      modulus = std::sqrt(std::max(0.0, ev.maxCoeff()));
    }
    // The projector J/n turns the constant eigenvalue 1 into 0, which is harmless for the max.
    GapResult r = finish(modulus, "dense");
    r.iterations = 0;
    r.residual = 0.0;
    return r;
  }

  const std::size_t budget =
      options.max_iterations != 0
          ? options.max_iterations
          : std::max<std::size_t>(2000, static_cast<std::size_t>(50.0 * std::sqrt(static_cast<double>(n))));
  std::mt19937_64 rng(options.seed);
  ConvolutionOperator op(nu);
  const ExtremeEigen top = lanczos_extreme(op, true, options.tol, budget, rng);
  double modulus = 0.0;
  GapResult r;
  if (symmetric) {
    const ExtremeEigen bottom = lanczos_extreme(op, false, options.tol, budget, rng);
    modulus = std::max(std::abs(top.value), std::abs(bottom.value));
    r = finish(modulus, "iterative");
    r.iterations = top.steps + bottom.steps;
    r.residual = std::max(top.residual, bottom.residual);
    r.converged = top.converged && bottom.converged;
  } else {
    modulus = std::sqrt(std::max(0.0, top.value));
    r = finish(modulus, "iterative");
    r.iterations = top.steps;
    r.residual = top.residual;
    r.converged = top.converged;
  }
  return r;
}

std::vector<double> regular_spectrum(const Measure& nu) {
  if (nu.size() > kDenseSpectrumMaxOrder)
    throw InvalidArgumentError("regular_spectrum is dense; order " + std::to_string(nu.size()) + " is too large");
  if (!nu.is_symmetric(kSymmetryTol)) throw InvalidArgumentError("regular_spectrum needs a symmetric measure");
  Eigen::MatrixXd m = dense_operator(nu);
  m = 0.5 * (m + m.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  return {es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size()};
}

double regular_trace(const Measure& nu) { return static_cast<double>(nu.size()) * nu[GroupTable::identity()]; }

double nontrivial_operator_norm(const Measure& mu) {
  GapOptions opts;
  opts.method = GapOptions::Method::kDense;
  return spectral_gap(mu, opts).top_nontrivial_modulus;
}

SarnakXueReport verify_sarnak_xue(const Measure& mu, const CharacterTable& chars, double tol) {
  const GroupTable& t = mu.table();
  const std::size_t n = t.order();
  if (n > kDenseSpectrumMaxOrder) throw InvalidArgumentError("Sarnak-Xue check is dense; order too large");
  if (!mu.is_symmetric(1e-12)) throw InvalidArgumentError("Sarnak-Xue check needs a symmetric measure");
  if (chars.group_order() != n) throw InvalidArgumentError("character table belongs to a different group");

  SarnakXueReport rep;
  double self = 0.0;
  for (ElementIndex h = 0; h < n; ++h) self += mu[h] * mu[t.invert(h)];
  rep.regular_trace_of_square = static_cast<double>(n) * self;

  Eigen::MatrixXd m = dense_operator(mu);
  m = 0.5 * (m + m.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  const Eigen::VectorXd& lambda = es.eigenvalues();
  const Eigen::MatrixXd& vecs = es.eigenvectors();

  // x y^{-1} lookup, built once.
  std::vector<ElementIndex> quotient(n * n);
  for (ElementIndex y = 0; y < n; ++y) {
    const auto act = t.right_action(t.invert(y));
    for (ElementIndex x = 0; x < n; ++x) quotient[x * n + y] = act[x];
  }

  // shares(c, pi): the part of eigenvector c lying in the pi-isotypic component.
  const std::size_t nirr = chars.num_irreps();
  Eigen::MatrixXd shares(n, nirr);
  Eigen::MatrixXd proj(n, n);
  for (std::size_t pi = 0; pi < nirr; ++pi) {
    const double scale = chars.dim(pi) / static_cast<double>(n);
    std::vector<double> f(n);
    for (ElementIndex g = 0; g < n; ++g) f[g] = scale * chars.at_element(pi, g).real();
    for (ElementIndex x = 0; x < n; ++x)
      for (ElementIndex y = 0; y < n; ++y) proj(x, y) = f[quotient[x * n + y]];
    const Eigen::MatrixXd pv = proj * vecs;
    shares.col(static_cast<Eigen::Index>(pi)) = (vecs.array() * pv.array()).colwise().sum().transpose();
  }

  const double cluster_tol = 1e-9;
  rep.worst_margin = std::numeric_limits<double>::infinity();
  for (Eigen::Index lo = 0; lo < static_cast<Eigen::Index>(n);) {
    Eigen::Index hi = lo + 1;
    while (hi < static_cast<Eigen::Index>(n) && lambda(hi) - lambda(hi - 1) <= cluster_tol) ++hi;
    const double value = lambda.segment(lo, hi - lo).mean();
    for (std::size_t pi = 0; pi < nirr; ++pi) {
      const double share = shares.col(static_cast<Eigen::Index>(pi)).segment(lo, hi - lo).sum();
      if (std::abs(share - std::round(share)) > 1e-6) {
        rep.ambiguous = true;
        rep.warnings.push_back("eigenvalue " + std::to_string(value) + ": isotypic share " + std::to_string(share) +
                               " in irrep " + std::to_string(pi) + " is not integral");
      }
      if (share < 0.5) continue;
      SarnakXueRow row{value, pi, chars.dim(pi), share, chars.dim(pi) * value * value};
      rep.worst_margin = std::min(rep.worst_margin, rep.regular_trace_of_square + tol - row.lhs);
      rep.rows.push_back(row);
    }
    lo = hi;
  }
  rep.pass = !rep.ambiguous && rep.worst_margin >= 0.0;
  return rep;
}

SandwichReport folklore_sandwich(const GroupTable& table, const GenSet& genset, double tol) {
  if (!genset.symmetric || !genset.contains_identity)
    throw InvalidArgumentError("sandwich needs a symmetric generating set containing the identity");
  SandwichReport rep;
  rep.order = table.order();
  rep.generators = genset.size();
  const GrowthProfile growth = diameter(table, genset);
  if (!growth.generating) throw InvalidArgumentError("sandwich: the set does not generate the group");
  rep.diameter = growth.diameter;
  rep.gap = spectral_gap(Measure::uniform_on(table, genset.members)).gap;
  rep.inverse_gap = rep.gap > 0 ? 1.0 / rep.gap : std::numeric_limits<double>::infinity();
  rep.lower = table.order() > 1 ? (rep.diameter - 1) / std::log(static_cast<double>(table.order())) : 0.0;
  rep.upper = static_cast<double>(genset.size()) * rep.diameter * rep.diameter;
  // Compare in gap form so the tolerance is on the gap itself.
  rep.lower_holds = rep.lower <= 0.0 || rep.gap <= 1.0 / rep.lower + tol;
  rep.upper_holds = rep.upper > 0.0 ? rep.gap >= 1.0 / rep.upper - tol : rep.gap >= 1.0 - tol;
  rep.pass = rep.lower_holds && rep.upper_holds;
  return rep;
}

GapSymmetrizationReport gap_symmetrization_bounds(const Measure& mu, double tol) {
  GapSymmetrizationReport rep;
  GapOptions opts;
  opts.tol = std::min(opts.tol, tol * 1e-2);
  rep.gap = spectral_gap(mu, opts).gap;
  rep.gap_symmetrized = spectral_gap(symmetrize(mu), opts).gap;
  rep.middle = 1.0 - std::sqrt(std::max(0.0, 1.0 - rep.gap_symmetrized));
  rep.pass = rep.gap_symmetrized >= rep.gap - tol && rep.gap >= rep.middle - tol && rep.middle >= rep.gap_symmetrized / 2 - tol;
  return rep;
}

double calibrate_c0(const QuotientChain& chain, const Measure& mu_finest, double a, const GapOptions& options) {
  double c0 = 0.0;
  bool any = false;
  for (const auto& level : chain.levels()) {
    if (!level.omega2) continue;
    const Measure mu = pushforward(mu_finest, level.from_finest, *level.table);
    const double gap = spectral_gap(mu, options).gap;
    if (!(gap > 0.0)) throw InvalidArgumentError("calibration level has zero spectral gap");
    const double lg = std::log(static_cast<double>(level.table->order()));
    c0 = std::max(c0, 1.0 / (gap * std::pow(lg, a)));
    any = true;
  }
  if (!any) throw InvalidArgumentError("no squarefree level in the chain to calibrate against");
  return c0;
}

TraceReport trace_decay_experiment(const QuotientChain& chain, const Measure& mu_finest, const WalkSchedule& schedule,
                                   std::optional<double> bound, std::size_t memory_cap_elements) {
  if (&mu_finest.table() != &chain.finest()) throw InvalidArgumentError("measure must live on the finest level");
  TraceReport rep;
  rep.c0 = schedule.c0;
  rep.a = schedule.a;
  rep.bound = bound;
  rep.max_trace = 0.0;
  rep.min_trace = std::numeric_limits<double>::infinity();
  for (const auto& level : chain.levels()) {
    const GroupTable& t = *level.table;
    if (t.order() > memory_cap_elements) {
      rep.complete = false;
      rep.note = "stopped at modulus " + std::to_string(level.modulus) + ": order " + std::to_string(t.order()) +
                 " exceeds the memory cap";
      break;
    }
    TraceRow row;
    row.modulus = level.modulus;
    row.index = t.order();
    row.omega2 = level.omega2;
    row.walk_length = walk_length(schedule, static_cast<double>(t.order()));
    const Measure mu = pushforward(mu_finest, level.from_finest, t);
    row.trace = regular_trace(convolution_power(mu, static_cast<std::uint64_t>(row.walk_length)));
    if (bound) row.below_bound = row.trace <= *bound;
    rep.max_trace = std::max(rep.max_trace, row.trace);
    rep.min_trace = std::min(rep.min_trace, row.trace);
    rep.rows.push_back(row);
  }
  rep.pass = rep.complete && !rep.rows.empty();
  for (const auto& row : rep.rows) {
    if (row.trace < 1.0 - 1e-9) rep.pass = false;
    if (row.below_bound && !*row.below_bound) rep.pass = false;
  }
  return rep;
}

}  // namespace hw
