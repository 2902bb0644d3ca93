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

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace hw {

using ElementIndex = std::uint32_t;

inline constexpr int kMaxMatrixDim = 4;
inline constexpr std::size_t kDefaultOrderCap = std::size_t{1} << 21;

/// Raised when a group would exceed the configured enumeration cap.
class CapExceededError : public std::runtime_error {
 public:
  CapExceededError(const std::string& what, std::uint64_t order, std::uint64_t cap)
      : std::runtime_error(what), order_(order), cap_(cap) {}
  std::uint64_t order() const { return order_; }
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t order_;
  std::uint64_t cap_;
};

class InvalidArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A d x d matrix over Z/qZ with entries kept reduced in [0, q).
class ModMatrix {
 public:
  ModMatrix() = default;
  ModMatrix(int d, std::uint32_t q);

  static ModMatrix identity(int d, std::uint32_t q);
  /// Elementary transvection I + sign * E_{row,col}.
  static ModMatrix transvection(int d, std::uint32_t q, int row, int col, int sign = 1);
  /// Row-major integer entries, reduced mod q (negative values allowed).
  static ModMatrix from_integers(int d, std::uint32_t q, std::span<const std::int64_t> row_major);

  int dim() const { return d_; }
  std::uint32_t modulus() const { return q_; }
  std::uint32_t at(int r, int c) const { return entries_[r * d_ + c]; }
  void set(int r, int c, std::int64_t value);

  ModMatrix operator*(const ModMatrix& rhs) const;
  bool operator==(const ModMatrix& rhs) const = default;

  /// Determinant reduced into [0, q).
  std::uint32_t det() const;
  /// Inverse of a determinant-one matrix via the adjugate.
  ModMatrix inverse() const;
  /// Entrywise reduction to a modulus dividing q.
  ModMatrix reduce(std::uint32_t coarse) const;

  const std::array<std::uint32_t, kMaxMatrixDim * kMaxMatrixDim>& entries() const { return entries_; }
  std::string str() const;

 private:
  std::int32_t d_ = 0;
  std::uint32_t q_ = 0;
  std::array<std::uint32_t, kMaxMatrixDim * kMaxMatrixDim> entries_{};
};

/// Exact packed hash key for a ModMatrix; d*d*bits(q-1) must fit in 128 bits.
struct ElementKey {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  bool operator==(const ElementKey&) const = default;
};

struct ElementKeyHash {
  std::size_t operator()(const ElementKey& k) const noexcept;
};

enum class GroupFamily { kSpecialLinear, kCyclic, kSymmetric, kSubgroup };

std::string family_name(GroupFamily f);

/// Closed-form |SL_d(Z/qZ)|, multiplicative over prime powers.
std::uint64_t special_linear_order(int d, std::uint64_t q);

/// Prime factorization as (prime, exponent) pairs in increasing order.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

/// A fully enumerated finite matrix group. Immutable after construction and
/// safe to share between threads.
class GroupTable {
 public:
  static GroupTable special_linear(int d, std::uint32_t q, std::size_t cap = kDefaultOrderCap);
  /// Z/n realized as upper unitriangular 2x2 matrices mod n; element k sits at index k.
  static GroupTable cyclic(std::uint32_t n);
  /// S_n (n = 3 or 4) acting on the sum-zero lattice, reduced mod 2.
  static GroupTable symmetric(int n);
  /// Closure of `generators` under multiplication. Identity is always at index 0.
  static GroupTable generated_by(std::vector<ModMatrix> generators, GroupFamily family,
                                 std::size_t cap = kDefaultOrderCap);
  /// Rebuild from an explicit element list (identity first). Used by the binary cache.
  static GroupTable from_elements(std::vector<ModMatrix> elements, std::vector<ModMatrix> generators,
                                  GroupFamily family);

  std::size_t order() const { return elements_.size(); }
  int dim() const { return d_; }
  std::uint32_t modulus() const { return q_; }
  GroupFamily family() const { return family_; }
  std::string name() const;

  const ModMatrix& element(ElementIndex i) const { return elements_[i]; }
  const std::vector<ModMatrix>& elements() const { return elements_; }
  const std::vector<ModMatrix>& canonical_generators() const { return generators_; }

  std::optional<ElementIndex> find(const ModMatrix& m) const;
  /// Throws InvalidArgumentError if `m` is not in the table.
  ElementIndex index_of(const ModMatrix& m) const;

  static constexpr ElementIndex identity() { return 0; }
  ElementIndex multiply(ElementIndex a, ElementIndex b) const;
  ElementIndex invert(ElementIndex a) const { return inverse_[a]; }

  /// Permutation i -> index(elements[i] * elements[s]).
  std::vector<ElementIndex> right_action(ElementIndex s) const;
  /// Permutation i -> index(elements[s] * elements[i]).
  std::vector<ElementIndex> left_action(ElementIndex s) const;

  std::vector<ElementIndex> generator_indices() const;

 private:
  GroupTable() = default;
  void build_index();

  int d_ = 0;
  std::uint32_t q_ = 0;
  GroupFamily family_ = GroupFamily::kSpecialLinear;
  std::vector<ModMatrix> elements_;
  std::vector<ModMatrix> generators_;
  std::vector<ElementIndex> inverse_;
  std::unordered_map<ElementKey, ElementIndex, ElementKeyHash> index_;
};

ElementKey pack_key(const ModMatrix& m);

/// A set of element indices used as a generating set S.
struct GenSet {
  std::vector<ElementIndex> members;  // sorted, unique
  bool contains_identity = false;
  bool symmetric = false;

  static GenSet from_indices(const GroupTable& table, std::vector<ElementIndex> members);
  /// Reduce integer matrices into `table`, optionally adding the identity.
  static GenSet from_matrices(const GroupTable& table, const std::vector<ModMatrix>& gens,
                              bool add_identity);
  std::size_t size() const { return members.size(); }
};

/// Subgroup generated by `seed`, as sorted element indices.
struct SubgroupResult {
  std::vector<ElementIndex> elements;
  bool is_whole_group = false;
};

SubgroupResult subgroup_closure(const GroupTable& table, std::span<const ElementIndex> seed);

/// Entrywise reduction from a fine table to a coarse one (coarse modulus divides fine).
struct QuotientMap {
  std::vector<ElementIndex> image;  // fine index -> coarse index

  static QuotientMap reduce(const GroupTable& fine, const GroupTable& coarse);
  ElementIndex operator()(ElementIndex fine) const { return image[fine]; }
};

/// Named elements of the small symmetric groups built by GroupTable::symmetric.
/// `perm` lists images of 0..n-1.
ModMatrix symmetric_group_matrix(std::span<const int> perm);

/// Standard symmetric generating sets per family ("std" and "alt"), identity included.
std::vector<ModMatrix> standard_generators(const GroupTable& table, const std::string& which);

/// Center and derived subgroup as sorted index sets.
std::vector<ElementIndex> center(const GroupTable& table);
std::vector<ElementIndex> derived_subgroup(const GroupTable& table);
bool is_normal_subgroup(const GroupTable& table, std::span<const ElementIndex> subgroup);

/// Order of an element.
std::uint64_t element_order(const GroupTable& table, ElementIndex g);

// Binary cache: magic "HWGT", version, family, d, q, order, packed elements.
inline constexpr std::uint32_t kCacheVersion = 1;
void save_table(const GroupTable& table, const std::string& path);
GroupTable load_table(const std::string& path);

}  // namespace hw
