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

#include "hw/diameter.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace hw {
namespace {

constexpr int kVerifyAbove = 20;

std::vector<std::vector<ElementIndex>> right_actions(const GroupTable& table, const std::vector<ElementIndex>& gens) {
  std::vector<std::vector<ElementIndex>> out;
  out.reserve(gens.size());
  for (ElementIndex s : gens) out.push_back(table.right_action(s));
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

GrowthProfile diameter(const GroupTable& table, const GenSet& genset) {
  if (!genset.contains_identity) throw InvalidArgumentError("diameter requires the identity in S");
  const std::size_t n = table.order();
  const auto actions = right_actions(table, genset.members);

  GrowthProfile out;
  std::vector<char> seen(n, 0);
  std::vector<ElementIndex> frontier{GroupTable::identity()}, next;
  seen[GroupTable::identity()] = 1;
  std::size_t reached = 1;
  out.sizes.push_back(1);
  ElementIndex last = GroupTable::identity();
  while (!frontier.empty()) {
    next.clear();
    for (ElementIndex x : frontier)
      for (const auto& act : actions) {
        const ElementIndex y = act[x];
        if (!seen[y]) {
          seen[y] = 1;
          next.push_back(y);
        }
      }
    if (next.empty()) break;
    reached += next.size();
    out.sizes.push_back(reached);
    last = next.back();
    std::swap(frontier, next);
  }
  out.reached = reached;
  out.generating = reached == n;
  out.diameter = static_cast<int>(out.sizes.size()) - 1;

  if (out.diameter > kVerifyAbove) {
    const int check = bidirectional_distance(table, genset, last);
    if (check != out.diameter)
      throw std::logic_error("meet-in-the-middle distance " + std::to_string(check) + " disagrees with BFS depth " +
                             std::to_string(out.diameter));
    out.bidirectional_checked = true;
  }
  return out;
}

int bidirectional_distance(const GroupTable& table, const GenSet& genset, ElementIndex target) {
  if (target == GroupTable::identity()) return 0;
  const std::size_t n = table.order();
  std::vector<ElementIndex> inverses;
  for (ElementIndex s : genset.members) inverses.push_back(table.invert(s));
  const auto fwd_actions = right_actions(table, genset.members);
  const auto bwd_actions = right_actions(table, inverses);

  std::vector<int> dist_f(n, -1), dist_b(n, -1);
  std::vector<ElementIndex> front_f{GroupTable::identity()}, front_b{target};
  dist_f[GroupTable::identity()] = 0;
  dist_b[target] = 0;
  int depth_f = 0, depth_b = 0;
  while (!front_f.empty() && !front_b.empty()) {
    const bool forward = front_f.size() <= front_b.size();
    auto& front = forward ? front_f : front_b;
    auto& dist = forward ? dist_f : dist_b;
    const auto& other = forward ? dist_b : dist_f;
    const auto& actions = forward ? fwd_actions : bwd_actions;
    int& depth = forward ? depth_f : depth_b;
    std::vector<ElementIndex> next;
    int best = -1;
    for (ElementIndex x : front)
      for (const auto& act : actions) {
        const ElementIndex y = act[x];
        if (dist[y] >= 0) continue;
        dist[y] = depth + 1;
        next.push_back(y);
        if (other[y] >= 0) {
          const int total = depth + 1 + other[y];
          if (best < 0 || total < best) best = total;
        }
      }
    ++depth;
    if (best >= 0) return best;
    front = std::move(next);
  }
  return -1;
}

std::vector<IntegerMatrix> standard_integer_generators(int d) {
  if (d < 2 || d > kMaxMatrixDim) throw InvalidArgumentError("matrix dimension out of range");
  std::vector<IntegerMatrix> out;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if (i == j) continue;
      for (int sign : {1, -1}) {
        IntegerMatrix m(static_cast<std::size_t>(d * d), 0);
        for (int k = 0; k < d; ++k) m[k * d + k] = 1;
        m[i * d + j] = sign;
        out.push_back(std::move(m));
      }
    }
  return out;
}

PrimeSplitReport prime_splitting_check(int d, const std::vector<std::uint32_t>& chain,
                                       const std::vector<IntegerMatrix>& generators, double bound, std::size_t cap) {
  std::vector<std::uint32_t> q = chain;
  if (q.empty() || q.front() != 1) q.insert(q.begin(), 1);
  if (q.size() < 2) throw InvalidArgumentError("prime-splitting chain needs at least one step");
  for (std::size_t i = 1; i < q.size(); ++i)
    if (q[i] % q[i - 1] != 0 || !is_prime(q[i] / q[i - 1]))
      throw InvalidArgumentError("chain step " + std::to_string(q[i - 1]) + " -> " + std::to_string(q[i]) +
                                 " is not a prime ratio");

  std::map<std::uint32_t, int> cache;
  auto diam_at = [&](std::uint32_t modulus) {
    if (modulus == 1) return 0;
    if (auto it = cache.find(modulus); it != cache.end()) return it->second;
    const GroupTable t = GroupTable::special_linear(d, modulus, cap);
    std::vector<ModMatrix> mats;
    for (const auto& g : generators) mats.push_back(ModMatrix::from_integers(d, modulus, g));
    const GrowthProfile profile = diameter(t, GenSet::from_matrices(t, mats, true));
    if (!profile.generating)
      throw InvalidArgumentError("generators do not generate SL_" + std::to_string(d) + "(Z/" + std::to_string(modulus) +
                                 ")");
    cache[modulus] = profile.diameter;
    return profile.diameter;
  };

  PrimeSplitReport rep;
  rep.bound = bound;
  rep.pass = true;
  for (std::size_t i = 1; i < q.size(); ++i) {
    PrimeSplitRow row;
    row.modulus = q[i];
    row.prime = q[i] / q[i - 1];
    row.diam_level = diam_at(q[i]);
    row.diam_previous = diam_at(q[i - 1]);
    row.diam_prime = diam_at(row.prime);
    row.ratio = static_cast<double>(row.diam_level) / (row.diam_previous + row.diam_prime);
    row.within_bound = row.ratio <= bound;
    rep.max_ratio = std::max(rep.max_ratio, row.ratio);
    rep.pass = rep.pass && row.within_bound;
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace hw
