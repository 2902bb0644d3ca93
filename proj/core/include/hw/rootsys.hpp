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

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

namespace hw {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;
using RationalVector = std::vector<Rational>;

enum class RootType { kA, kB, kC, kD, kE6, kE7, kE8, kF4, kG2 };

/// "A", "B", "C", "D", "E6", "E7", "E8", "F4", "G2" (case-insensitive). A bare "E" is rejected.
RootType parse_root_type(const std::string& name);
std::string root_type_name(RootType type, int rank);
/// Throws InvalidArgumentError for pairs like D_2, E_9 or classical rank above 12.
void check_admissible(RootType type, int rank);
/// Admissible ranks for a type within the classical limit, in increasing order.
std::vector<int> admissible_ranks(RootType type);

inline constexpr int kMaxClassicalRank = 12;

/// Exact root system in standard coordinates, with the invariant inner product
/// scaled so that short roots have squared length 2.
class RootSystem {
 public:
  static RootSystem build(RootType type, int rank);

  RootType type() const { return type_; }
  int rank() const { return rank_; }
  std::string name() const { return root_type_name(type_, rank_); }
  const std::vector<RationalVector>& simple_roots() const { return simple_; }
  const std::vector<RationalVector>& positive_roots() const { return positive_; }
  /// Coordinates of each positive root over the simple roots (nonnegative integers).
  const std::vector<std::vector<std::int64_t>>& positive_root_coordinates() const { return positive_coords_; }
  const std::vector<RationalVector>& fundamental_weights() const { return fundamental_; }
  const RationalVector& rho() const { return rho_; }
  const Rational& scale() const { return scale_; }

  Rational inner(const RationalVector& x, const RationalVector& y) const;
  /// 2<x, a>/<a, a>
  Rational coroot_pairing(const RationalVector& x, const RationalVector& a) const;
  /// Cartan matrix, entry (i, j) = <alpha_i, alpha_j^vee>.
  std::vector<std::vector<std::int64_t>> cartan() const;
  /// Gram matrix of the fundamental weights.
  std::vector<std::vector<Rational>> weight_gram() const;
  /// sum_i m_i omega_i in ambient coordinates.
  RationalVector weight_vector(const std::vector<std::int64_t>& fundamental_coords) const;

 private:
  RootType type_ = RootType::kA;
  int rank_ = 0;
  Rational scale_;
  std::vector<RationalVector> simple_;
  std::vector<RationalVector> positive_;
  std::vector<std::vector<std::int64_t>> positive_coords_;
  std::vector<RationalVector> fundamental_;
  RationalVector rho_;
};

/// Classical count of positive roots for the type.
std::int64_t expected_positive_roots(RootType type, int rank);

/// Weyl's dimension formula; the weight is given in fundamental-weight coordinates
/// and must be dominant. Throws if the product is not an integer.
BigInt weyl_dimension(const RootSystem& rs, const std::vector<std::int64_t>& weight);

/// 1 + |S| / |R_+|.
Rational exponent_A(const RootSystem& rs);
/// The closed-form entry of the exponent table for the type.
Rational table_exponent(RootType type, int rank);

struct RootsLemmaReport {
  std::string name;
  Rational bound;                    // A(G) - 1
  Rational worst_ratio;              // max over proper S' of (|S|-|S'|)/(|R_+|-|R'|)
  std::vector<int> worst_subset;     // indices of S'
  std::size_t subsets_checked = 0;
  bool empty_subset_is_extremal = false;
  bool pass = false;
};

RootsLemmaReport verify_roots_lemma(const RootSystem& rs);

/// Dominant weights v with <v, v> <= r^2, in fundamental-weight coordinates.
std::vector<std::vector<std::int64_t>> dominant_weights_in_ball(const RootSystem& rs, double r);

}  // namespace hw
