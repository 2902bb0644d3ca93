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

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hw/group.hpp"
#include "hw/measure.hpp"

namespace hw {

inline constexpr std::size_t kConjugacyClassCap = std::size_t{1} << 17;
inline constexpr std::size_t kMaxClasses = 256;

/// Conjugacy classes in order of first appearance; the identity class is class 0.
struct ConjugacyClasses {
  std::vector<ElementIndex> representatives;
  std::vector<std::size_t> sizes;
  std::vector<std::uint32_t> class_of;  // per element
  std::vector<std::uint64_t> element_orders;  // per class

  std::size_t count() const { return representatives.size(); }
};

ConjugacyClasses conjugacy_classes(const GroupTable& table, std::size_t cap = kConjugacyClassCap);

class CharacterTableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Complex irreducible characters. Row 0 is the trivial character; rows are
/// sorted by dimension, ties broken by the finite-field construction order.
class CharacterTable {
 public:
  CharacterTable(ConjugacyClasses classes, std::vector<std::vector<std::complex<double>>> values,
                 std::vector<int> dims, std::uint64_t group_order, std::uint64_t exponent, std::uint64_t prime);

  const ConjugacyClasses& classes() const { return classes_; }
  std::size_t num_irreps() const { return dims_.size(); }
  std::size_t num_classes() const { return classes_.count(); }
  int dim(std::size_t irrep) const { return dims_[irrep]; }
  const std::vector<int>& dims() const { return dims_; }
  std::complex<double> value(std::size_t irrep, std::size_t cls) const { return values_[irrep][cls]; }
  std::complex<double> at_element(std::size_t irrep, ElementIndex g) const {
    return values_[irrep][classes_.class_of[g]];
  }
  std::uint64_t group_order() const { return order_; }
  std::uint64_t exponent() const { return exponent_; }
  std::uint64_t prime() const { return prime_; }

  /// max |<chi_i, chi_j> - delta_ij| over rows.
  double row_orthogonality_error() const;
  /// max |sum_i chi_i(a) conj(chi_i(b)) - delta_ab |C_G(a)|| over classes.
  double column_orthogonality_error() const;

 private:
  ConjugacyClasses classes_;
  std::vector<std::vector<std::complex<double>>> values_;
  std::vector<int> dims_;
  std::uint64_t order_;
  std::uint64_t exponent_;
  std::uint64_t prime_;
};

struct DixonOptions {
  std::size_t class_cap = kMaxClasses;
  /// Upper limit on the search for l = 1 mod exponent; widened once on failure.
  std::uint64_t prime_search_limit = std::uint64_t{1} << 31;
  std::uint64_t seed = 0xd1c0;
};

/// Burnside-Dixon: common eigenvectors of the class-multiplication matrices over
/// F_l with l = 1 mod exp(G) and l > 2 sqrt|G|, lifted to complex values.
CharacterTable character_table(const GroupTable& table, const DixonOptions& options = {});

struct KernelRow {
  int dim;
  std::uint64_t kernel_order;
  std::uint64_t kernel_index;  // [G : Ker pi]
};

struct QuasirandomCert {
  int min_nontrivial_dim = 0;
  double alpha = 0.0;
  double c = 0.0;  // largest c with dim >= c [G:Ker]^alpha on every row
  std::vector<KernelRow> rows;
};

QuasirandomCert quasirandom_cert(const CharacterTable& chars, double alpha);

struct CliffordRow {
  std::size_t n_irrep;
  int dim;           // dim(rho_j)
  int conjugates;    // a(rho_j)
  int min_g_dim;     // d(rho_j)
  double term;       // dim^2 M (a dim^2 M / d)^{(l'-l)/l}
};

struct CliffordData {
  std::vector<CliffordRow> rows;
  std::vector<std::vector<std::size_t>> orbits;  // G-orbits on N-irreps
};

/// Orbit sizes a(rho_j) and minimal covering dimensions d(rho_j) for N normal in G.
CliffordData clifford_data(const GroupTable& g_table, const CharacterTable& g_chars, const GroupTable& n_table,
                           const CharacterTable& n_chars, std::span<const ElementIndex> n_in_g);

struct CliffordReport {
  bool applicable = false;   // chi_{G/N}(mu^{*(2l)}) <= M
  double hypothesis_value = 0.0;
  double m = 0.0;
  double lhs = 0.0;          // chi_G(mu^{*(2l')})
  double bound = 0.0;
  bool pass = false;
  CliffordData data;
  std::string note;
};

/// The refined trace bound through a normal subgroup: if chi_{G/N}(mu^{*(2l)}) <= M then
/// chi_G(mu^{*(2l')}) <= sum_j dim_j^2 M (a_j dim_j^2 M / d_j)^{(l'-l)/l}.
/// `m` defaults to the measured hypothesis value (nudged above 1 when needed).
CliffordReport clifford_bound_check(const GroupTable& g_table, std::span<const ElementIndex> normal_subgroup,
                                    const Measure& mu, int l, int l_prime, std::optional<double> m = std::nullopt,
                                    double tol = 1e-6);

/// The normal subgroup as its own GroupTable plus the embedding into G.
struct SubgroupTable {
  GroupTable table;
  std::vector<ElementIndex> embedding;  // subgroup index -> G index
};

SubgroupTable make_subgroup_table(const GroupTable& g_table, std::span<const ElementIndex> subgroup);

}  // namespace hw
