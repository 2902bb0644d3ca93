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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hw/group.hpp"
#include "hw/measure.hpp"

namespace hw {

class CharacterTable;

inline constexpr std::size_t kDenseSpectrumMaxOrder = 2048;

struct GapOptions {
  enum class Method { kAuto, kDense, kIterative };
  double tol = 1e-10;
  Method method = Method::kAuto;
  /// 0 means the default budget of 50 * sqrt(|G|) Lanczos steps per end (at least 2000).
  std::size_t max_iterations = 0;
  std::uint64_t seed = 0x5eed;
};

struct GapResult {
  double gap = 0.0;
  double top_nontrivial_modulus = 1.0;
  std::string method;  // "dense" | "iterative"
  std::size_t iterations = 0;
  double residual = 0.0;
  bool converged = true;
};

/// 1 - ||Reg(mu)|| on the orthogonal complement of the constants. Nonsymmetric
/// measures go through the top eigenvalue of Reg(mu~ * mu).
GapResult spectral_gap(const Measure& mu, const GapOptions& options = {});

/// All eigenvalues of Reg(nu) for symmetric nu, ascending. Dense; order <= 2048.
std::vector<double> regular_spectrum(const Measure& nu);

/// chi_G(nu) = |G| nu(1).
double regular_trace(const Measure& nu);

struct SarnakXueRow {
  double eigenvalue;
  std::size_t irrep;
  int irrep_dim;
  double multiplicity;  // dimension of the eigenspace inside the isotypic component
  double lhs;           // dim(pi) * lambda^2
};

struct SarnakXueReport {
  double regular_trace_of_square = 0.0;  // chi_G(mu * mu)
  std::vector<SarnakXueRow> rows;
  double worst_margin = 0.0;  // min over rows of chi_G(mu*mu) + tol - lhs
  std::vector<std::string> warnings;  // ambiguous isotypic splits
  bool ambiguous = false;
  bool pass = false;
};

/// Checks dim(pi) lambda^2 <= chi_G(mu * mu) + tol for every eigenvalue of Reg(mu),
/// with each eigenspace split into isotypic components using the character table.
SarnakXueReport verify_sarnak_xue(const Measure& mu, const CharacterTable& chars, double tol = 1e-8);

struct SandwichReport {
  std::size_t order = 0;
  std::size_t generators = 0;
  int diameter = 0;
  double gap = 0.0;
  double lower = 0.0;        // (diam - 1) / log|G|
  double inverse_gap = 0.0;  // gap^{-1}
  double upper = 0.0;        // |S| diam^2
  bool lower_holds = false;
  bool upper_holds = false;
  bool pass = false;
};

/// (diam - 1)/log|G| <= gap^{-1} <= |S| diam^2 for symmetric S with 1 in S.
SandwichReport folklore_sandwich(const GroupTable& table, const GenSet& genset, double tol = 1e-9);

struct GapSymmetrizationReport {
  double gap = 0.0;              // gap(G, mu)
  double gap_symmetrized = 0.0;  // gap(G, mu~ * mu)
  double middle = 0.0;           // 1 - sqrt(1 - gap(mu~ * mu))
  bool pass = false;
};

GapSymmetrizationReport gap_symmetrization_bounds(const Measure& mu, double tol = 1e-9);

struct TraceRow {
  std::uint32_t modulus = 0;
  std::uint64_t index = 0;  // [G : Gamma] = |G / Gamma|
  std::int64_t walk_length = 0;
  double trace = 0.0;
  bool omega2 = false;
  std::optional<bool> below_bound;
};

struct TraceReport {
  std::vector<TraceRow> rows;
  double c0 = 0.0;
  double a = 0.0;
  double max_trace = 0.0;
  double min_trace = 0.0;
  std::optional<double> bound;  // M, when supplied
  bool complete = true;         // false when a level hit the memory cap
  std::string note;
  bool pass = true;
};

/// C0 = max over Omega_2 levels of 1 / (gap(G/Gamma, mu) log^A [G:Gamma]).
double calibrate_c0(const QuotientChain& chain, const Measure& mu_finest, double a, const GapOptions& options = {});

/// For each level: l from the schedule, the pushforward, its l-th convolution power,
/// and chi_{G/Gamma}(mu^{*(l)}).
TraceReport trace_decay_experiment(const QuotientChain& chain, const Measure& mu_finest, const WalkSchedule& schedule,
                                   std::optional<double> bound = std::nullopt,
                                   std::size_t memory_cap_elements = kDefaultOrderCap);

/// ||Reg^0(mu)|| for an explicit measure, dense. Used for power-decay checks.
double nontrivial_operator_norm(const Measure& mu);

}  // namespace hw
