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
#include <string>
#include <vector>

#include "hw/group.hpp"

namespace hw {

/// |S^l| for l = 0, 1, ... until the walk saturates.
struct GrowthProfile {
  std::vector<std::size_t> sizes;
  int diameter = 0;
  bool generating = true;         // false: results are relative to the subgroup reached
  std::size_t reached = 0;
  bool bidirectional_checked = false;
};

/// Layered BFS from the identity under right multiplication by S. Requires 1 in S.
/// Diameters above 20 are re-derived for the farthest element by meet-in-the-middle.
GrowthProfile diameter(const GroupTable& table, const GenSet& genset);

/// Word length of `target` over S, by bidirectional search. Returns -1 if unreachable.
int bidirectional_distance(const GroupTable& table, const GenSet& genset, ElementIndex target);

struct PrimeSplitRow {
  std::uint32_t modulus = 0;
  std::uint32_t prime = 0;
  int diam_level = 0;     // diam(SL_d(Z/q_i), S)
  int diam_previous = 0;  // diam(SL_d(Z/q_{i-1}), S); 0 at q_0 = 1
  int diam_prime = 0;     // diam(SL_d(Z/p), S)
  double ratio = 0.0;     // C_i
  bool within_bound = false;
};

struct PrimeSplitReport {
  std::vector<PrimeSplitRow> rows;
  double max_ratio = 0.0;
  double bound = 0.0;
  bool pass = false;
};

/// Integer matrices (row-major, d*d entries each) reduced into every level.
using IntegerMatrix = std::vector<std::int64_t>;

/// Empirical C_i = diam_i / (diam_{i-1} + diam_p) along q_0 = 1 | q_1 | ... | q_n with
/// prime ratios; passes when every C_i <= bound.
PrimeSplitReport prime_splitting_check(int d, const std::vector<std::uint32_t>& chain,
                                       const std::vector<IntegerMatrix>& generators, double bound = 6.0,
                                       std::size_t cap = kDefaultOrderCap);

/// I, T^{+-1}, U^{+-1} style transvection set as integer matrices.
std::vector<IntegerMatrix> standard_integer_generators(int d);

}  // namespace hw
