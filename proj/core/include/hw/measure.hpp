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
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "hw/group.hpp"

namespace hw {

/// A probability measure on a GroupTable, stored as a dense weight vector.
/// Holds a non-owning reference; the table must outlive the measure.
class Measure {
 public:
  /// Validates nonnegativity and total mass 1 within 1e-12.
  Measure(const GroupTable& table, std::vector<double> weights);

  static Measure delta(const GroupTable& table, ElementIndex g);
  static Measure uniform(const GroupTable& table);
  /// Uniform on the listed elements; repeated indices add weight.
  static Measure uniform_on(const GroupTable& table, std::span<const ElementIndex> members);
  /// Uniform on S u S^{-1} u {1}.
  static Measure lazy_symmetric(const GroupTable& table, std::span<const ElementIndex> members);

  const GroupTable& table() const { return *table_; }
  std::span<const double> weights() const { return weights_; }
  double operator[](ElementIndex g) const { return weights_[g]; }
  std::size_t size() const { return weights_.size(); }

  std::vector<std::pair<ElementIndex, double>> support() const;
  double total_mass() const;
  bool is_symmetric(double tol = 0.0) const;
  /// The reflected measure g -> mu(g^{-1}).
  Measure reversed() const;

 private:
  friend Measure convolve(const Measure&, const Measure&);
  Measure(const GroupTable& table, std::vector<double> weights, bool /*trusted*/)
      : table_(&table), weights_(std::move(weights)) {}

  const GroupTable* table_;
  std::vector<double> weights_;
};

/// Left convolution by a fixed measure, f -> mu * f, using the sparse support of mu.
/// Also the operator Reg(mu) on L^2(G).
class ConvolutionOperator {
 public:
  explicit ConvolutionOperator(const Measure& mu);

  std::size_t dimension() const { return order_; }
  /// out = mu * in. `in` and `out` must not alias.
  void apply(std::span<const double> in, std::span<double> out) const;

 private:
  std::size_t order_;
  std::vector<double> weights_;
  std::vector<std::vector<ElementIndex>> actions_;  // left multiplication by each support element
  bool compensated_;
};

/// (mu * nu)(g) = sum_h mu(g h^{-1}) nu(h).
Measure convolve(const Measure& mu, const Measure& nu);
/// The symmetric measure mu~ * mu; exactly symmetric pointwise.
Measure symmetrize(const Measure& mu);
/// mu^{*(l)}; l = 0 yields delta at the identity.
Measure convolution_power(const Measure& mu, std::uint64_t l);
/// Seeded random measures for property checks. The symmetric one places `support` random
/// weights in [0.1, 1) on g and g^{-1} alike; the other has full support.
Measure random_symmetric_measure(const GroupTable& table, std::uint64_t seed, std::size_t support = 8);
Measure random_measure(const GroupTable& table, std::uint64_t seed);
/// Pushforward along an entrywise reduction.
Measure pushforward(const Measure& mu, const QuotientMap& map, const GroupTable& coarse);

/// Walk-length rule 2 floor(C0 (10 - log(x)^{-1/10}) log(x)^{A+1}).
struct WalkSchedule {
  enum class Mode { kFiniteGroup, kCompact };
  double c0 = 1.0;
  double a = 1.0;
  Mode mode = Mode::kFiniteGroup;
};

/// Requires x >= e. Throws InvalidArgumentError otherwise.
std::int64_t walk_length(const WalkSchedule& schedule, double x);
/// Same rule with log(x) supplied directly (log_x >= 1).
std::int64_t walk_length_at_log(const WalkSchedule& schedule, long double log_x);

/// A divisibility chain of moduli q_0 | q_1 | ... with one SL_d table per level.
class QuotientChain {
 public:
  struct Level {
    std::uint32_t modulus;
    std::shared_ptr<const GroupTable> table;
    QuotientMap from_finest;
    bool omega2;  // squarefree with few prime factors
  };

  /// Levels are ordered from coarsest to finest. `omega2_prime_bound` bounds the
  /// number of prime factors a squarefree modulus may have to count as Omega_2.
  static QuotientChain special_linear(int d, std::vector<std::uint32_t> moduli, std::size_t cap = kDefaultOrderCap,
                                      int omega2_prime_bound = 1);

  const std::vector<Level>& levels() const { return levels_; }
  const GroupTable& finest() const { return *levels_.back().table; }
  /// [Gamma' : Gamma] between consecutive levels i and i+1.
  std::uint64_t index_ratio(std::size_t i) const;

 private:
  std::vector<Level> levels_;
};

bool is_omega2_modulus(std::uint64_t q, int prime_bound);

}  // namespace hw
