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

#include "hw/measure.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <string>

namespace hw {
namespace {

constexpr double kMassTol = 1e-12;
constexpr std::size_t kCompensationThreshold = 100000;

}  // namespace

Measure::Measure(const GroupTable& table, std::vector<double> weights) : table_(&table), weights_(std::move(weights)) {
  if (weights_.size() != table.order())
    throw InvalidArgumentError("measure has " + std::to_string(weights_.size()) + " weights for a group of order " +
                               std::to_string(table.order()));
  for (double w : weights_)
    if (!(w >= 0.0)) throw InvalidArgumentError("measure weights must be nonnegative");
  const double mass = total_mass();
  if (std::abs(mass - 1.0) > kMassTol)
    throw InvalidArgumentError("measure weights sum to " + std::to_string(mass) + ", not 1");
}

Measure Measure::delta(const GroupTable& table, ElementIndex g) {
  std::vector<double> w(table.order(), 0.0);
  w.at(g) = 1.0;
  return Measure(table, std::move(w));
}

Measure Measure::uniform(const GroupTable& table) {
  return Measure(table, std::vector<double>(table.order(), 1.0 / static_cast<double>(table.order())));
}

Measure Measure::uniform_on(const GroupTable& table, std::span<const ElementIndex> members) {
  if (members.empty()) throw InvalidArgumentError("uniform_on needs a nonempty set");
  std::vector<double> w(table.order(), 0.0);
  const double each = 1.0 / static_cast<double>(members.size());
  for (ElementIndex g : members) w.at(g) += each;
  return Measure(table, std::move(w), true);
}

Measure Measure::lazy_symmetric(const GroupTable& table, std::span<const ElementIndex> members) {
  std::vector<ElementIndex> all{GroupTable::identity()};
  for (ElementIndex g : members) {
    all.push_back(g);
    all.push_back(table.invert(g));
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return uniform_on(table, all);
}

std::vector<std::pair<ElementIndex, double>> Measure::support() const {
  std::vector<std::pair<ElementIndex, double>> out;
  for (ElementIndex i = 0; i < weights_.size(); ++i)
    if (weights_[i] != 0.0) out.emplace_back(i, weights_[i]);
  return out;
}

double Measure::total_mass() const {
  // Neumaier summation; cheap relative to everything else that touches a measure.
  double sum = 0.0, comp = 0.0;
  for (double w : weights_) {
    const double t = sum + w;
    comp += std::abs(sum) >= std::abs(w) ? (sum - t) + w : (w - t) + sum;
    sum = t;
  }
  return sum + comp;
}

bool Measure::is_symmetric(double tol) const {
  for (ElementIndex i = 0; i < weights_.size(); ++i)
    if (std::abs(weights_[i] - weights_[table_->invert(i)]) > tol) return false;
  return true;
}

Measure Measure::reversed() const {
  std::vector<double> w(weights_.size());
  for (ElementIndex i = 0; i < weights_.size(); ++i) w[i] = weights_[table_->invert(i)];
  return Measure(*table_, std::move(w), true);
}

ConvolutionOperator::ConvolutionOperator(const Measure& mu)
    : order_(mu.size()), compensated_(mu.size() > kCompensationThreshold) {
  for (auto [s, w] : mu.support()) {
    weights_.push_back(w);
    actions_.push_back(mu.table().left_action(s));
  }
}

void ConvolutionOperator::apply(std::span<const double> in, std::span<double> out) const {
  // (mu * f)(s h) += mu(s) f(h)
  std::fill(out.begin(), out.end(), 0.0);
  if (!compensated_) {
    for (std::size_t k = 0; k < actions_.size(); ++k) {
      const double w = weights_[k];
      const ElementIndex* act = actions_[k].data();
      for (std::size_t h = 0; h < order_; ++h) out[act[h]] += w * in[h];
    }
    return;
  }
  std::vector<double> comp(order_, 0.0);
  for (std::size_t k = 0; k < actions_.size(); ++k) {
    const double w = weights_[k];
    const ElementIndex* act = actions_[k].data();
    for (std::size_t h = 0; h < order_; ++h) {
      const ElementIndex g = act[h];
      const double term = w * in[h];
      const double t = out[g] + term;
      comp[g] += std::abs(out[g]) >= std::abs(term) ? (out[g] - t) + term : (term - t) + out[g];
      out[g] = t;
    }
  }
  for (std::size_t g = 0; g < order_; ++g) out[g] += comp[g];
}

Measure convolve(const Measure& mu, const Measure& nu) {
  if (&mu.table() != &nu.table()) throw InvalidArgumentError("convolve: measures live on different tables");
  std::vector<double> out(nu.size());
  const auto mu_support = mu.support(), nu_support = nu.support();
  if (nu_support.size() < mu_support.size()) {
    // (mu * nu)(g h) += mu(g) nu(h), running over the few atoms of nu.
    const auto mw = mu.weights();
    for (auto [h, w] : nu_support) {
      const auto act = mu.table().right_action(h);
      for (std::size_t g = 0; g < act.size(); ++g) out[act[g]] += mw[g] * w;
    }
  } else {
    ConvolutionOperator op(mu);
    op.apply(nu.weights(), out);
  }
  // Renormalize away accumulated rounding; the mass check in the constructor stays meaningful.
  const double mass = std::accumulate(out.begin(), out.end(), 0.0);
  for (double& w : out) w = std::max(0.0, w / mass);
  return Measure(mu.table(), std::move(out), true);
}

Measure symmetrize(const Measure& mu) {
  Measure raw = convolve(mu.reversed(), mu);
  std::vector<double> w(raw.weights().begin(), raw.weights().end());
  const GroupTable& t = mu.table();
  for (ElementIndex g = 0; g < w.size(); ++g) {
    const ElementIndex gi = t.invert(g);
    if (gi < g) continue;
    const double avg = 0.5 * (w[g] + w[gi]);
    w[g] = avg;
    w[gi] = avg;
  }
  return Measure(t, std::move(w));
}

Measure convolution_power(const Measure& mu, std::uint64_t l) {
  const GroupTable& t = mu.table();
  if (l == 0) return Measure::delta(t, GroupTable::identity());
  ConvolutionOperator op(mu);
  std::vector<double> cur(mu.weights().begin(), mu.weights().end());
  std::vector<double> next(cur.size());
  for (std::uint64_t i = 1; i < l; ++i) {
    op.apply(cur, next);
    std::swap(cur, next);
    if (i % 64 == 0) {
      const double mass = std::accumulate(cur.begin(), cur.end(), 0.0);
      for (double& w : cur) w /= mass;
    }
  }
  const double mass = std::accumulate(cur.begin(), cur.end(), 0.0);
  for (double& w : cur) w = std::max(0.0, w / mass);
  return Measure(t, std::move(cur));
}

Measure random_symmetric_measure(const GroupTable& table, std::uint64_t seed, std::size_t support) {
  if (support == 0) throw InvalidArgumentError("random measure needs a nonempty support");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, table.order() - 1);
  std::uniform_real_distribution<double> weight(0.1, 1.0);
  std::vector<double> w(table.order(), 0.0);
  for (std::size_t k = 0; k < support; ++k) {
    const auto g = static_cast<ElementIndex>(pick(rng));
    const double x = weight(rng);
    w[g] += x;
    w[table.invert(g)] += x;
  }
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  for (double& x : w) x /= total;
  return Measure(table, std::move(w));
}

Measure random_measure(const GroupTable& table, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> weight(0.0, 1.0);
  std::vector<double> w(table.order());
  for (double& x : w) x = weight(rng);
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  for (double& x : w) x /= total;
  return Measure(table, std::move(w));
}

Measure pushforward(const Measure& mu, const QuotientMap& map, const GroupTable& coarse) {
  if (map.image.size() != mu.size()) throw InvalidArgumentError("pushforward: map does not match measure");
  std::vector<double> w(coarse.order(), 0.0);
  for (ElementIndex g = 0; g < mu.size(); ++g) w[map(g)] += mu[g];
  return Measure(coarse, std::move(w));
}

std::int64_t walk_length_at_log(const WalkSchedule& schedule, long double log_x) {
  if (!(log_x >= 1.0L - 1e-15L)) throw InvalidArgumentError("walk_length requires x >= e");
  if (schedule.c0 < 0 || schedule.a < 0) throw InvalidArgumentError("walk schedule parameters must be nonnegative");
  log_x = std::max(log_x, 1.0L);
  const long double c = static_cast<long double>(schedule.c0) * (10.0L - std::pow(log_x, -0.1L));
  const long double y = c * std::pow(log_x, static_cast<long double>(schedule.a) + 1.0L);
  long double k = std::floor(y);
  // Values a few ulps under an integer come from rounding in log(); snap them up.
  if (y - k > 1.0L - 1e-12L * std::max(1.0L, y)) k += 1.0L;
  return 2 * static_cast<std::int64_t>(k);
}

std::int64_t walk_length(const WalkSchedule& schedule, double x) {
  if (!(x >= std::numbers::e)) throw InvalidArgumentError("walk_length requires x >= e, got " + std::to_string(x));
  return walk_length_at_log(schedule, std::log(static_cast<long double>(x)));
}

bool is_omega2_modulus(std::uint64_t q, int prime_bound) {
  const auto f = factorize(q);
  if (std::any_of(f.begin(), f.end(), [](const auto& pk) { return pk.second > 1; })) return false;
  return static_cast<int>(f.size()) <= prime_bound;
}

QuotientChain QuotientChain::special_linear(int d, std::vector<std::uint32_t> moduli, std::size_t cap,
                                            int omega2_prime_bound) {
  if (moduli.empty()) throw InvalidArgumentError("quotient chain needs at least one modulus");
  for (std::size_t i = 1; i < moduli.size(); ++i)
    if (moduli[i] % moduli[i - 1] != 0)
      throw InvalidArgumentError("chain moduli must divide each other: " + std::to_string(moduli[i - 1]) + " ∤ " +
                                 std::to_string(moduli[i]));
  QuotientChain chain;
  std::vector<std::shared_ptr<const GroupTable>> tables;
  for (auto q : moduli) tables.push_back(std::make_shared<const GroupTable>(GroupTable::special_linear(d, q, cap)));
  const GroupTable& finest = *tables.back();
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    chain.levels_.push_back(
        Level{moduli[i], tables[i], QuotientMap::reduce(finest, *tables[i]), is_omega2_modulus(moduli[i], omega2_prime_bound)});
  }
  return chain;
}

std::uint64_t QuotientChain::index_ratio(std::size_t i) const {
  return levels_.at(i + 1).table->order() / levels_.at(i).table->order();
}

}  // namespace hw
