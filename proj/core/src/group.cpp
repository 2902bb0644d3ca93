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

#include "hw/group.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <sstream>

namespace hw {
namespace {

std::uint32_t reduce_signed(std::int64_t v, std::uint32_t q) {
  std::int64_t r = v % static_cast<std::int64_t>(q);
  if (r < 0) r += q;
  return static_cast<std::uint32_t>(r);
}

// Laplace expansion over int64 residues; d <= 4 keeps this cheap.
std::int64_t det_mod(const std::array<std::int64_t, 16>& a, int n, int stride, std::uint32_t q) {
  if (n == 1) return a[0];
  std::int64_t acc = 0;
  std::array<std::int64_t, 16> minor{};
  for (int c = 0; c < n; ++c) {
    int k = 0;
    for (int r = 1; r < n; ++r)
      for (int cc = 0; cc < n; ++cc)
        if (cc != c) minor[k++] = a[r * stride + cc];
    std::int64_t sub = det_mod(minor, n - 1, n - 1, q);
    std::int64_t term = static_cast<std::int64_t>((static_cast<unsigned __int128>(a[c]) * sub) % q);
    acc = (c % 2 == 0) ? (acc + term) % q : (acc + q - term) % q;
  }
  return acc;
}

std::array<std::int64_t, 16> widen(const ModMatrix& m) {
  std::array<std::int64_t, 16> a{};
  for (int r = 0; r < m.dim(); ++r)
    for (int c = 0; c < m.dim(); ++c) a[r * m.dim() + c] = m.at(r, c);
  return a;
}

}  // namespace

ModMatrix::ModMatrix(int d, std::uint32_t q) : d_(d), q_(q) {
  if (d < 1 || d > kMaxMatrixDim) throw InvalidArgumentError("matrix dimension must be in [1, 4]");
  if (q < 2) throw InvalidArgumentError("invalid modulus: q must be at least 2");
}

ModMatrix ModMatrix::identity(int d, std::uint32_t q) {
  ModMatrix m(d, q);
  for (int i = 0; i < d; ++i) m.entries_[i * d + i] = 1;
  return m;
}

ModMatrix ModMatrix::transvection(int d, std::uint32_t q, int row, int col, int sign) {
  ModMatrix m = identity(d, q);
  m.set(row, col, sign);
  return m;
}

ModMatrix ModMatrix::from_integers(int d, std::uint32_t q, std::span<const std::int64_t> row_major) {
  if (row_major.size() != static_cast<std::size_t>(d * d))
    throw InvalidArgumentError("expected " + std::to_string(d * d) + " matrix entries");
  ModMatrix m(d, q);
  for (int i = 0; i < d * d; ++i) m.entries_[i] = reduce_signed(row_major[i], q);
  return m;
}

void ModMatrix::set(int r, int c, std::int64_t value) { entries_[r * d_ + c] = reduce_signed(value, q_); }

ModMatrix ModMatrix::operator*(const ModMatrix& rhs) const {
  ModMatrix out;
  out.d_ = d_;
  out.q_ = q_;
  for (int r = 0; r < d_; ++r) {
    for (int c = 0; c < d_; ++c) {
      std::uint64_t acc = 0;
      for (int k = 0; k < d_; ++k) {
        acc += static_cast<std::uint64_t>(entries_[r * d_ + k]) * rhs.entries_[k * d_ + c] % q_;
      }
      out.entries_[r * d_ + c] = static_cast<std::uint32_t>(acc % q_);
    }
  }
  return out;
}

std::uint32_t ModMatrix::det() const { return static_cast<std::uint32_t>(det_mod(widen(*this), d_, d_, q_)); }

ModMatrix ModMatrix::inverse() const {
  if (det() != 1 % q_) throw InvalidArgumentError("inverse() requires a determinant-one matrix");
  ModMatrix out(d_, q_);
  if (d_ == 1) {
    out.entries_[0] = entries_[0];
    return out;
  }
  auto a = widen(*this);
  std::array<std::int64_t, 16> minor{};
  for (int r = 0; r < d_; ++r) {
    for (int c = 0; c < d_; ++c) {
      int k = 0;
      for (int rr = 0; rr < d_; ++rr)
        for (int cc = 0; cc < d_; ++cc)
          if (rr != r && cc != c) minor[k++] = a[rr * d_ + cc];
      std::int64_t cof = det_mod(minor, d_ - 1, d_ - 1, q_);
      if ((r + c) % 2 == 1) cof = (q_ - cof) % q_;
      out.entries_[c * d_ + r] = static_cast<std::uint32_t>(cof);  // adjugate is the transpose
    }
  }
  return out;
}

ModMatrix ModMatrix::reduce(std::uint32_t coarse) const {
  if (coarse < 2 || q_ % coarse != 0)
    throw InvalidArgumentError("non-divisor modulus: " + std::to_string(coarse) + " does not divide " +
                               std::to_string(q_));
  ModMatrix out(d_, coarse);
  for (int i = 0; i < d_ * d_; ++i) out.entries_[i] = entries_[i] % coarse;
  return out;
}

std::string ModMatrix::str() const {
  std::ostringstream os;
  os << '[';
  for (int r = 0; r < d_; ++r) {
    if (r) os << "; ";
    for (int c = 0; c < d_; ++c) os << (c ? " " : "") << at(r, c);
  }
  os << "] mod " << q_;
  return os.str();
}

ElementKey pack_key(const ModMatrix& m) {
  const int bits = std::max(1, static_cast<int>(std::bit_width(m.modulus() - 1)));
  ElementKey key;
  int pos = 0;
  for (int i = 0; i < m.dim() * m.dim(); ++i) {
    const std::uint64_t v = m.entries()[i];
    if (pos < 64) {
      key.lo |= v << pos;
      if (pos + bits > 64) key.hi |= v >> (64 - pos);
    } else {
      key.hi |= v << (pos - 64);
    }
    pos += bits;
  }
  return key;
}

std::size_t ElementKeyHash::operator()(const ElementKey& k) const noexcept {
  // splitmix64 finalizer over both halves
  auto mix = [](std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  };
  return static_cast<std::size_t>(mix(k.lo ^ mix(k.hi)));
}

std::string family_name(GroupFamily f) {
  switch (f) {
    case GroupFamily::kSpecialLinear: return "SL";
    case GroupFamily::kCyclic: return "Z";
    case GroupFamily::kSymmetric: return "S";
    case GroupFamily::kSubgroup: return "sub";
  }
  return "?";
}

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    int k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    if (k) out.emplace_back(p, k);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::uint64_t special_linear_order(int d, std::uint64_t q) {
  // |SL_d(Z/p^k)| = p^{(d^2-1)(k-1)} * p^{d(d-1)/2} * prod_{i=2..d} (p^i - 1)
  unsigned __int128 total = 1;
  constexpr unsigned __int128 kSaturate = static_cast<unsigned __int128>(1) << 100;
  for (auto [p, k] : factorize(q)) {
    unsigned __int128 local = 1;
    for (int i = 0; i < (d * d - 1) * (k - 1) + d * (d - 1) / 2; ++i) local = std::min(local * p, kSaturate);
    for (int i = 2; i <= d; ++i) {
      unsigned __int128 pi = 1;
      for (int j = 0; j < i; ++j) pi *= p;
      local = std::min(local * (pi - 1), kSaturate);
    }
    total = std::min(total * local, kSaturate);
  }
  return total > std::numeric_limits<std::uint64_t>::max() ? std::numeric_limits<std::uint64_t>::max()
                                                             : static_cast<std::uint64_t>(total);
}

void GroupTable::build_index() {
  index_.clear();
  index_.reserve(elements_.size() * 2);
  for (ElementIndex i = 0; i < elements_.size(); ++i) index_.emplace(pack_key(elements_[i]), i);
  inverse_.assign(elements_.size(), 0);
  for (ElementIndex i = 0; i < elements_.size(); ++i) {
    if (i != 0 && inverse_[i] != 0) continue;
    ElementIndex j = index_of(elements_[i].inverse());
    inverse_[i] = j;
    inverse_[j] = i;
  }
}

GroupTable GroupTable::generated_by(std::vector<ModMatrix> generators, GroupFamily family, std::size_t cap) {
  if (generators.empty()) throw InvalidArgumentError("generated_by needs at least one generator");
  const int d = generators.front().dim();
  const std::uint32_t q = generators.front().modulus();
  const int bits = std::max(1, static_cast<int>(std::bit_width(q - 1)));
  if (d * d * bits > 128) throw InvalidArgumentError("element key exceeds 128 bits for this (d, q)");
  for (const auto& g : generators) {
    if (g.dim() != d || g.modulus() != q) throw InvalidArgumentError("generators disagree on (d, q)");
    if (g.det() != 1 % q) throw InvalidArgumentError("generator has determinant != 1: " + g.str());
  }

  GroupTable t;
  t.d_ = d;
  t.q_ = q;
  t.family_ = family;
  t.generators_ = std::move(generators);
  t.elements_.push_back(ModMatrix::identity(d, q));
  t.index_.emplace(pack_key(t.elements_[0]), 0);
  for (std::size_t head = 0; head < t.elements_.size(); ++head) {
    for (const auto& g : t.generators_) {
      ModMatrix next = t.elements_[head] * g;
      auto [it, inserted] = t.index_.emplace(pack_key(next), static_cast<ElementIndex>(t.elements_.size()));
      if (!inserted) continue;
      if (t.elements_.size() >= cap)
        throw CapExceededError("group closure exceeded the order cap " + std::to_string(cap), t.elements_.size() + 1,
                               cap);
      t.elements_.push_back(std::move(next));
    }
  }
  t.build_index();
  return t;
}

GroupTable GroupTable::from_elements(std::vector<ModMatrix> elements, std::vector<ModMatrix> generators,
                                     GroupFamily family) {
  if (elements.empty()) throw InvalidArgumentError("empty element list");
  GroupTable t;
  t.d_ = elements.front().dim();
  t.q_ = elements.front().modulus();
  t.family_ = family;
  if (!(elements.front() == ModMatrix::identity(t.d_, t.q_)))
    throw InvalidArgumentError("identity must be the first element");
  t.elements_ = std::move(elements);
  t.generators_ = std::move(generators);
  t.build_index();
  if (t.index_.size() != t.elements_.size()) throw InvalidArgumentError("duplicate elements in table");
  return t;
}

GroupTable GroupTable::special_linear(int d, std::uint32_t q, std::size_t cap) {
  if (q < 2) throw InvalidArgumentError("invalid modulus: q must be at least 2");
  if (d < 2 || d > kMaxMatrixDim) throw InvalidArgumentError("SL_d requires 2 <= d <= 4");
  const std::uint64_t expected = special_linear_order(d, q);
  if (expected > cap)
    throw CapExceededError("|SL_" + std::to_string(d) + "(Z/" + std::to_string(q) + ")| = " +
                               std::to_string(expected) + " exceeds the order cap " + std::to_string(cap),
                           expected, cap);
  std::vector<ModMatrix> gens;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (i != j) {
        gens.push_back(ModMatrix::transvection(d, q, i, j, 1));
        gens.push_back(ModMatrix::transvection(d, q, i, j, -1));
      }
  GroupTable t = generated_by(std::move(gens), GroupFamily::kSpecialLinear, cap);
  if (t.order() != expected)
    throw std::logic_error("enumerated order " + std::to_string(t.order()) + " != closed form " +
                           std::to_string(expected));
  return t;
}

GroupTable GroupTable::cyclic(std::uint32_t n) {
  if (n < 2) throw InvalidArgumentError("invalid modulus: cyclic group order must be at least 2");
  std::vector<ModMatrix> gens{ModMatrix::transvection(2, n, 0, 1, 1)};
  return generated_by(std::move(gens), GroupFamily::kCyclic, kDefaultOrderCap);
}

ModMatrix symmetric_group_matrix(std::span<const int> perm) {
  const int n = static_cast<int>(perm.size());
  if (n < 3 || n > 4) throw InvalidArgumentError("symmetric groups supported for n in {3, 4}");
  // Action on b_i = e_i - e_{n-1}, i < n-1, reduced mod 2.
  ModMatrix m(n - 1, 2);
  const int last = n - 1;
  for (int i = 0; i < n - 1; ++i) {
    std::array<std::int64_t, 4> col{};
    if (perm[i] != last) col[perm[i]] += 1;
    if (perm[last] != last) col[perm[last]] -= 1;
    for (int r = 0; r < n - 1; ++r) m.set(r, i, col[r]);
  }
  return m;
}

GroupTable GroupTable::symmetric(int n) {
  if (n != 3 && n != 4) throw InvalidArgumentError("symmetric groups supported for n in {3, 4}");
  std::vector<int> swap(n), cycle(n);
  std::iota(swap.begin(), swap.end(), 0);
  std::swap(swap[0], swap[1]);
  for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  std::vector<ModMatrix> gens{symmetric_group_matrix(swap), symmetric_group_matrix(cycle)};
  GroupTable t = generated_by(std::move(gens), GroupFamily::kSymmetric, kDefaultOrderCap);
  std::size_t fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  if (t.order() != fact) throw std::logic_error("symmetric group representation is not faithful");
  return t;
}

std::string GroupTable::name() const {
  switch (family_) {
    case GroupFamily::kSpecialLinear:
      return "SL_" + std::to_string(d_) + "(Z/" + std::to_string(q_) + ")";
    case GroupFamily::kCyclic: return "Z/" + std::to_string(q_);
    case GroupFamily::kSymmetric: return "S_" + std::to_string(d_ + 1);
    case GroupFamily::kSubgroup: return "subgroup of order " + std::to_string(order());
  }
  return "?";
}

std::optional<ElementIndex> GroupTable::find(const ModMatrix& m) const {
  if (m.dim() != d_ || m.modulus() != q_) return std::nullopt;
  auto it = index_.find(pack_key(m));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementIndex GroupTable::index_of(const ModMatrix& m) const {
  auto i = find(m);
  if (!i) throw InvalidArgumentError("matrix " + m.str() + " is not an element of " + name());
  return *i;
}

ElementIndex GroupTable::multiply(ElementIndex a, ElementIndex b) const {
  return index_.at(pack_key(elements_[a] * elements_[b]));
}

std::vector<ElementIndex> GroupTable::right_action(ElementIndex s) const {
  std::vector<ElementIndex> out(order());
  const ModMatrix& ms = elements_[s];
  for (ElementIndex i = 0; i < order(); ++i) out[i] = index_.at(pack_key(elements_[i] * ms));
  return out;
}

std::vector<ElementIndex> GroupTable::left_action(ElementIndex s) const {
  std::vector<ElementIndex> out(order());
  const ModMatrix& ms = elements_[s];
  for (ElementIndex i = 0; i < order(); ++i) out[i] = index_.at(pack_key(ms * elements_[i]));
  return out;
}

std::vector<ElementIndex> GroupTable::generator_indices() const {
  std::vector<ElementIndex> out;
  out.reserve(generators_.size());
  for (const auto& g : generators_) out.push_back(index_of(g));
  return out;
}

GenSet GenSet::from_indices(const GroupTable& table, std::vector<ElementIndex> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty()) throw InvalidArgumentError("generating set is empty");
  if (members.back() >= table.order()) throw InvalidArgumentError("generator index out of range");
  GenSet s;
  s.members = std::move(members);
  s.contains_identity = s.members.front() == GroupTable::identity();
  s.symmetric = std::all_of(s.members.begin(), s.members.end(), [&](ElementIndex g) {
    return std::binary_search(s.members.begin(), s.members.end(), table.invert(g));
  });
  return s;
}

GenSet GenSet::from_matrices(const GroupTable& table, const std::vector<ModMatrix>& gens, bool add_identity) {
  std::vector<ElementIndex> idx;
  for (const auto& g : gens) {
    const ModMatrix m = g.modulus() == table.modulus() ? g : g.reduce(table.modulus());
    idx.push_back(table.index_of(m));
  }
  if (add_identity) idx.push_back(GroupTable::identity());
  return from_indices(table, std::move(idx));
}

SubgroupResult subgroup_closure(const GroupTable& table, std::span<const ElementIndex> seed) {
  if (seed.empty()) throw InvalidArgumentError("subgroup_closure needs a nonempty seed");
  std::vector<std::vector<ElementIndex>> actions;
  for (ElementIndex s : seed) actions.push_back(table.right_action(s));
  std::vector<char> seen(table.order(), 0);
  std::vector<ElementIndex> out{GroupTable::identity()};
  seen[0] = 1;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& act : actions) {
      ElementIndex y = act[out[head]];
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  SubgroupResult r;
  r.is_whole_group = out.size() == table.order();
  r.elements = std::move(out);
  return r;
}

QuotientMap QuotientMap::reduce(const GroupTable& fine, const GroupTable& coarse) {
  if (fine.dim() != coarse.dim()) throw InvalidArgumentError("quotient map between different dimensions");
  if (fine.modulus() % coarse.modulus() != 0)
    throw InvalidArgumentError("non-divisor modulus: " + std::to_string(coarse.modulus()) + " does not divide " +
                               std::to_string(fine.modulus()));
  QuotientMap map;
  map.image.resize(fine.order());
  for (ElementIndex i = 0; i < fine.order(); ++i)
    map.image[i] = coarse.index_of(fine.element(i).reduce(coarse.modulus()));
  return map;
}

std::vector<ModMatrix> standard_generators(const GroupTable& table, const std::string& which) {
  const int d = table.dim();
  const std::uint32_t q = table.modulus();
  std::vector<ModMatrix> out{ModMatrix::identity(d, q)};
  auto with_inverse = [&](const ModMatrix& m) {
    out.push_back(m);
    out.push_back(m.inverse());
  };
  switch (table.family()) {
    case GroupFamily::kSpecialLinear:
      if (which == "std") {
        for (int i = 0; i < d; ++i)
          for (int j = 0; j < d; ++j)
            if (i != j) with_inverse(ModMatrix::transvection(d, q, i, j));
      } else if (which == "alt" && d == 2) {
        const ModMatrix t = ModMatrix::transvection(2, q, 0, 1);
        const ModMatrix u = ModMatrix::transvection(2, q, 1, 0);
        with_inverse(t);
        with_inverse(t * u);
      } else {
        throw InvalidArgumentError("unknown generator set '" + which + "' for " + table.name());
      }
      break;
    case GroupFamily::kCyclic: {
      const ModMatrix one = ModMatrix::transvection(2, q, 0, 1);
      if (which == "std") {
        with_inverse(one);
      } else if (which == "alt") {
        with_inverse(one * one);
        if (q % 2 == 0) with_inverse(one);
      } else {
        throw InvalidArgumentError("unknown generator set '" + which + "' for " + table.name());
      }
      break;
    }
    case GroupFamily::kSymmetric: {
      const int n = d + 1;
      if (which == "std") {
        std::vector<int> swap(n), cycle(n);
        std::iota(swap.begin(), swap.end(), 0);
        std::swap(swap[0], swap[1]);
        for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
        out.push_back(symmetric_group_matrix(swap));
        with_inverse(symmetric_group_matrix(cycle));
      } else if (which == "alt") {
        for (int i = 0; i + 1 < n; ++i) {
          std::vector<int> p(n);
          std::iota(p.begin(), p.end(), 0);
          std::swap(p[i], p[i + 1]);
          out.push_back(symmetric_group_matrix(p));
        }
      } else {
        throw InvalidArgumentError("unknown generator set '" + which + "' for " + table.name());
      }
      break;
    }
    case GroupFamily::kSubgroup:
      throw InvalidArgumentError("no standard generators for an anonymous subgroup");
  }
  return out;
}

std::vector<ElementIndex> center(const GroupTable& table) {
  std::vector<ElementIndex> out;
  const auto& gens = table.canonical_generators();
  for (ElementIndex i = 0; i < table.order(); ++i) {
    const ModMatrix& x = table.element(i);
    if (std::all_of(gens.begin(), gens.end(), [&](const ModMatrix& s) { return x * s == s * x; })) out.push_back(i);
  }
  return out;
}

namespace {

std::vector<ElementIndex> normal_closure(const GroupTable& table, std::vector<ElementIndex> seed) {
  const auto& gens = table.canonical_generators();
  while (true) {
    auto sub = subgroup_closure(table, seed).elements;
    std::vector<char> in(table.order(), 0);
    for (auto x : sub) in[x] = 1;
    bool grew = false;
    for (auto x : sub) {
      for (const auto& s : gens) {
        ElementIndex y = table.index_of(s * table.element(x) * s.inverse());
        if (!in[y]) {
          in[y] = 1;
          seed.push_back(y);
          grew = true;
        }
      }
    }
    if (!grew) return sub;
  }
}

}  // namespace

std::vector<ElementIndex> derived_subgroup(const GroupTable& table) {
  const auto& gens = table.canonical_generators();
  std::vector<ElementIndex> seed{GroupTable::identity()};
  for (const auto& a : gens)
    for (const auto& b : gens) seed.push_back(table.index_of(a * b * a.inverse() * b.inverse()));
  return normal_closure(table, std::move(seed));
}

bool is_normal_subgroup(const GroupTable& table, std::span<const ElementIndex> subgroup) {
  if (subgroup.empty()) return false;
  auto closed = subgroup_closure(table, subgroup).elements;
  std::vector<ElementIndex> given(subgroup.begin(), subgroup.end());
  std::sort(given.begin(), given.end());
  given.erase(std::unique(given.begin(), given.end()), given.end());
  if (closed != given) return false;
  std::vector<char> in(table.order(), 0);
  for (auto x : given) in[x] = 1;
  for (auto x : given)
    for (const auto& s : table.canonical_generators())
      if (!in[table.index_of(s * table.element(x) * s.inverse())]) return false;
  return true;
}

std::uint64_t element_order(const GroupTable& table, ElementIndex g) {
  const ModMatrix& m = table.element(g);
  const ModMatrix id = ModMatrix::identity(table.dim(), table.modulus());
  ModMatrix x = m;
  std::uint64_t k = 1;
  while (!(x == id)) {
    x = x * m;
    ++k;
  }
  return k;
}

}  // namespace hw
