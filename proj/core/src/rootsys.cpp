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

#include "hw/rootsys.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include "hw/group.hpp"

namespace hw {
namespace {

Rational half(std::int64_t x) { return Rational(x) / 2; }

RationalVector unit(int dim, int i, std::int64_t value = 1) {
  RationalVector v(static_cast<std::size_t>(dim), Rational(0));
  v[static_cast<std::size_t>(i)] = value;
  return v;
}

RationalVector sub(const RationalVector& a, const RationalVector& b) {
  RationalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

RationalVector add(const RationalVector& a, const RationalVector& b) {
  RationalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RationalVector scaled(const RationalVector& a, const Rational& s) {
  RationalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * s;
  return out;
}

RationalVector from_ints(std::initializer_list<std::int64_t> xs) {
  RationalVector v;
  for (auto x : xs) v.emplace_back(x);
  return v;
}

RationalVector from_halves(std::initializer_list<std::int64_t> xs) {
  RationalVector v;
  for (auto x : xs) v.push_back(half(x));
  return v;
}

std::vector<RationalVector> e8_simple_roots() {
  std::vector<RationalVector> s;
  s.push_back(from_halves({1, -1, -1, -1, -1, -1, -1, 1}));
  s.push_back(from_ints({1, 1, 0, 0, 0, 0, 0, 0}));
  for (int i = 0; i < 6; ++i) s.push_back(sub(unit(8, i + 1), unit(8, i)));
  return s;
}

std::vector<RationalVector> simple_roots_for(RootType type, int n) {
  std::vector<RationalVector> s;
  switch (type) {
    case RootType::kA:
      for (int i = 0; i < n; ++i) s.push_back(sub(unit(n + 1, i), unit(n + 1, i + 1)));
      break;
    case RootType::kB:
    case RootType::kC:
    case RootType::kD:
      for (int i = 0; i + 1 < n; ++i) s.push_back(sub(unit(n, i), unit(n, i + 1)));
      if (type == RootType::kB) s.push_back(unit(n, n - 1));
      if (type == RootType::kC) s.push_back(unit(n, n - 1, 2));
      if (type == RootType::kD) s.push_back(add(unit(n, n - 2), unit(n, n - 1)));
      break;
    case RootType::kE6:
    case RootType::kE7:
    case RootType::kE8: {
      auto e8 = e8_simple_roots();
      e8.resize(static_cast<std::size_t>(n));
      s = std::move(e8);
      break;
    }
    case RootType::kF4:
      s.push_back(from_ints({0, 1, -1, 0}));
      s.push_back(from_ints({0, 0, 1, -1}));
      s.push_back(from_ints({0, 0, 0, 1}));
      s.push_back(from_halves({1, -1, -1, -1}));
      break;
    case RootType::kG2:
      s.push_back(from_ints({1, -1, 0}));
      s.push_back(from_ints({-2, 1, 1}));
      break;
  }
  return s;
}

// Solves a x = b exactly by Gauss-Jordan; a is square and invertible.
RationalVector solve(std::vector<RationalVector> a, RationalVector b) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) throw std::logic_error("singular Gram matrix");
    std::swap(a[piv], a[c]);
    std::swap(b[piv], b[c]);
    const Rational inv = 1 / a[c][c];
    for (auto& x : a[c]) x *= inv;
    b[c] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rational f = a[r][c];
      for (std::size_t k = 0; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  return b;
}

bool is_integer(const Rational& x) { return boost::multiprecision::denominator(x) == 1; }

}  // namespace

RootType parse_root_type(const std::string& name) {
  std::string u;
  for (char c : name) u.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  if (u == "A") return RootType::kA;
  if (u == "B") return RootType::kB;
  if (u == "C") return RootType::kC;
  if (u == "D") return RootType::kD;
  if (u == "E6") return RootType::kE6;
  if (u == "E7") return RootType::kE7;
  if (u == "E8") return RootType::kE8;
  if (u == "F4") return RootType::kF4;
  if (u == "G2") return RootType::kG2;
  throw InvalidArgumentError("unknown root system type '" + name + "'");
}

std::string root_type_name(RootType type, int rank) {
  switch (type) {
    case RootType::kA: return "A" + std::to_string(rank);
    case RootType::kB: return "B" + std::to_string(rank);
    case RootType::kC: return "C" + std::to_string(rank);
    case RootType::kD: return "D" + std::to_string(rank);
    case RootType::kE6: return "E6";
    case RootType::kE7: return "E7";
    case RootType::kE8: return "E8";
    case RootType::kF4: return "F4";
    case RootType::kG2: return "G2";
  }
  return "?";
}

void check_admissible(RootType type, int rank) {
  auto bad = [&] { throw InvalidArgumentError("no root system " + root_type_name(type, rank)); };
  switch (type) {
    case RootType::kA:
      if (rank < 1 || rank > kMaxClassicalRank) bad();
      break;
    case RootType::kB:
    case RootType::kC:
      if (rank < 2 || rank > kMaxClassicalRank) bad();
      break;
    case RootType::kD:
      if (rank < 3 || rank > kMaxClassicalRank) bad();
      break;
    case RootType::kE6: if (rank != 6) bad(); break;
    case RootType::kE7: if (rank != 7) bad(); break;
    case RootType::kE8: if (rank != 8) bad(); break;
    case RootType::kF4: if (rank != 4) bad(); break;
    case RootType::kG2: if (rank != 2) bad(); break;
  }
}

std::vector<int> admissible_ranks(RootType type) {
  std::vector<int> out;
  for (int n = 1; n <= kMaxClassicalRank; ++n) {
    try {
      check_admissible(type, n);
      out.push_back(n);
    } catch (const InvalidArgumentError&) {
    }
  }
  return out;
}

std::int64_t expected_positive_roots(RootType type, int n) {
  switch (type) {
    case RootType::kA: return static_cast<std::int64_t>(n) * (n + 1) / 2;
    case RootType::kB:
    case RootType::kC: return static_cast<std::int64_t>(n) * n;
    case RootType::kD: return static_cast<std::int64_t>(n) * (n - 1);
    case RootType::kE6: return 36;
    case RootType::kE7: return 63;
    case RootType::kE8: return 120;
    case RootType::kF4: return 24;
    case RootType::kG2: return 6;
  }
  return 0;
}

Rational RootSystem::inner(const RationalVector& x, const RationalVector& y) const {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s * scale_;
}

Rational RootSystem::coroot_pairing(const RationalVector& x, const RationalVector& a) const {
  return 2 * inner(x, a) / inner(a, a);
}

RootSystem RootSystem::build(RootType type, int rank) {
  check_admissible(type, rank);
  RootSystem rs;
  rs.type_ = type;
  rs.rank_ = rank;
  rs.simple_ = simple_roots_for(type, rank);

  Rational min_norm = -1;
  for (const auto& a : rs.simple_) {
    Rational nn = 0;
    for (const auto& x : a) nn += x * x;
    if (min_norm < 0 || nn < min_norm) min_norm = nn;
  }
  rs.scale_ = 2 / min_norm;

  // All roots: closure of the simple roots under simple reflections, tracked in integer
  // simple-root coordinates through the Cartan matrix.
  const auto n = static_cast<std::size_t>(rank);
  std::vector<std::vector<std::int64_t>> cartan(n, std::vector<std::int64_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational c = rs.coroot_pairing(rs.simple_[i], rs.simple_[j]);
      if (!is_integer(c)) throw std::logic_error(rs.name() + ": non-integral Cartan entry");
      cartan[i][j] = static_cast<std::int64_t>(boost::multiprecision::numerator(c));
    }
  using Coords = std::vector<std::int64_t>;
  std::set<Coords> roots;
  std::vector<Coords> queue;
  for (std::size_t i = 0; i < n; ++i) {
    Coords e(n, 0);
    e[i] = 1;
    roots.insert(e);
    queue.push_back(e);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (std::size_t j = 0; j < n; ++j) {
      std::int64_t pairing = 0;
      for (std::size_t k = 0; k < n; ++k) pairing += queue[head][k] * cartan[k][j];
      if (pairing == 0) continue;
      Coords r = queue[head];
      r[j] -= pairing;
      if (roots.insert(r).second) queue.push_back(std::move(r));
    }
  }

  struct Entry {
    std::int64_t height;
    Coords coords;
  };
  std::vector<Entry> pos;
  for (const auto& c : roots) {
    const bool nonneg = std::all_of(c.begin(), c.end(), [](std::int64_t v) { return v >= 0; });
    const bool nonpos = std::all_of(c.begin(), c.end(), [](std::int64_t v) { return v <= 0; });
    if (!nonneg && !nonpos) throw std::logic_error(rs.name() + ": root with mixed-sign simple coordinates");
    if (nonneg) pos.push_back({std::accumulate(c.begin(), c.end(), std::int64_t{0}), c});
  }
  if (static_cast<std::int64_t>(roots.size()) != 2 * expected_positive_roots(type, rank) ||
      static_cast<std::int64_t>(pos.size()) != expected_positive_roots(type, rank))
    throw std::logic_error(rs.name() + ": root count mismatch");
  std::sort(pos.begin(), pos.end(), [](const Entry& a, const Entry& b) {
    return a.height != b.height ? a.height < b.height : a.coords > b.coords;
  });
  const std::size_t dim = rs.simple_[0].size();
  for (auto& e : pos) {
    RationalVector v(dim, Rational(0));
    for (std::size_t k = 0; k < n; ++k)
      if (e.coords[k] != 0) v = add(v, scaled(rs.simple_[k], Rational(e.coords[k])));
    rs.positive_.push_back(std::move(v));
    rs.positive_coords_.push_back(std::move(e.coords));
  }

  rs.rho_.assign(dim, Rational(0));
  for (const auto& r : rs.positive_) rs.rho_ = add(rs.rho_, r);
  rs.rho_ = scaled(rs.rho_, Rational(1, 2));

  // omega_i = sum_k c_ik alpha_k with sum_k c_ik <alpha_k, alpha_j^vee> = delta_ij.
  std::vector<RationalVector> pairing_t(n, RationalVector(n));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j) pairing_t[j][k] = rs.coroot_pairing(rs.simple_[k], rs.simple_[j]);
  for (std::size_t i = 0; i < n; ++i) {
    RationalVector delta(n, Rational(0));
    delta[i] = 1;
    const RationalVector c = solve(pairing_t, delta);
    RationalVector w(dim, Rational(0));
    for (std::size_t k = 0; k < n; ++k) w = add(w, scaled(rs.simple_[k], c[k]));
    rs.fundamental_.push_back(std::move(w));
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      if (rs.coroot_pairing(rs.fundamental_[i], rs.simple_[j]) != (i == j ? 1 : 0))
        throw std::logic_error(rs.name() + ": fundamental weights fail duality");
    // rho pairs to 1 with every simple coroot.
    if (rs.coroot_pairing(rs.rho_, rs.simple_[i]) != 1) throw std::logic_error(rs.name() + ": rho check failed");
  }
  return rs;
}

std::vector<std::vector<std::int64_t>> RootSystem::cartan() const {
  const auto n = simple_.size();
  std::vector<std::vector<std::int64_t>> c(n, std::vector<std::int64_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      c[i][j] = static_cast<std::int64_t>(boost::multiprecision::numerator(coroot_pairing(simple_[i], simple_[j])));
  return c;
}

std::vector<std::vector<Rational>> RootSystem::weight_gram() const {
  const auto n = fundamental_.size();
  std::vector<std::vector<Rational>> g(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g[i][j] = inner(fundamental_[i], fundamental_[j]);
  return g;
}

RationalVector RootSystem::weight_vector(const std::vector<std::int64_t>& m) const {
  if (m.size() != fundamental_.size()) throw InvalidArgumentError("weight has the wrong number of coordinates");
  RationalVector v(fundamental_[0].size(), Rational(0));
  for (std::size_t i = 0; i < m.size(); ++i) v = add(v, scaled(fundamental_[i], Rational(m[i])));
  return v;
}

BigInt weyl_dimension(const RootSystem& rs, const std::vector<std::int64_t>& weight) {
  for (auto m : weight)
    if (m < 0) throw InvalidArgumentError("weyl_dimension needs a dominant weight");
  const RationalVector shifted = add(rs.weight_vector(weight), rs.rho());
  Rational prod = 1;
  for (const auto& u : rs.positive_roots()) prod *= rs.inner(u, shifted) / rs.inner(u, rs.rho());
  if (!is_integer(prod)) throw std::logic_error("Weyl dimension product is not an integer");
  return boost::multiprecision::numerator(prod);
}

Rational exponent_A(const RootSystem& rs) {
  return 1 + Rational(rs.rank()) / Rational(static_cast<std::int64_t>(rs.positive_roots().size()));
}

Rational table_exponent(RootType type, int n) {
  check_admissible(type, n);
  switch (type) {
    case RootType::kA: return 1 + Rational(2, n + 1);
    case RootType::kB:
    case RootType::kC: return 1 + Rational(1, n);
    case RootType::kD: return 1 + Rational(1, n - 1);
    case RootType::kE6: return Rational(7, 6);
    case RootType::kE7: return Rational(10, 9);
    case RootType::kE8: return Rational(16, 15);
    case RootType::kF4: return Rational(7, 6);
    case RootType::kG2: return Rational(4, 3);
  }
  return 0;
}

RootsLemmaReport verify_roots_lemma(const RootSystem& rs) {
  const int n = rs.rank();
  if (n > kMaxClassicalRank) throw InvalidArgumentError("subset enumeration limited to rank 12");
  std::vector<std::uint32_t> support;
  for (const auto& c : rs.positive_root_coordinates()) {
    std::uint32_t mask = 0;
    for (int i = 0; i < n; ++i)
      if (c[static_cast<std::size_t>(i)] != 0) mask |= 1u << i;
    support.push_back(mask);
  }
  const auto total = static_cast<std::int64_t>(support.size());
  RootsLemmaReport rep;
  rep.name = rs.name();
  rep.bound = exponent_A(rs) - 1;
  rep.pass = true;
  const std::uint32_t full = (1u << n) - 1;
  bool have = false;
  for (std::uint32_t s = 0; s < full; ++s) {
    std::int64_t sub_roots = 0;
    for (auto m : support)
      if ((m & ~s) == 0) ++sub_roots;
    const int size = std::popcount(s);
    const Rational ratio(n - size, total - sub_roots);
    ++rep.subsets_checked;
    if (ratio > rep.bound) rep.pass = false;
    if (!have || ratio > rep.worst_ratio) {
      have = true;
      rep.worst_ratio = ratio;
      rep.worst_subset.clear();
      for (int i = 0; i < n; ++i)
        if (s & (1u << i)) rep.worst_subset.push_back(i);
    }
  }
  rep.empty_subset_is_extremal = rep.worst_ratio == Rational(n, total);
  return rep;
}

std::vector<std::vector<std::int64_t>> dominant_weights_in_ball(const RootSystem& rs, double r) {
  if (!(r >= 0)) throw InvalidArgumentError("radius must be nonnegative");
  const Rational r2 = Rational(r) * Rational(r);
  const auto g = rs.weight_gram();
  const std::size_t n = g.size();
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> m(n, 0);
  // Entries of the weight Gram matrix are nonnegative, so the norm grows in every coordinate.
  std::function<void(std::size_t, const Rational&)> rec = [&](std::size_t i, const Rational& norm) {
    if (i == n) {
      out.push_back(m);
      return;
    }
    Rational cur = norm;
    for (m[i] = 0;; ++m[i]) {
      if (cur > r2) break;
      rec(i + 1, cur);
      // norm(m + e_i) - norm(m) = 2 sum_{j<=i} m_j g_ij + g_ii (later coordinates are zero)
      Rational delta = g[i][i];
      for (std::size_t j = 0; j <= i; ++j) delta += 2 * Rational(m[j]) * g[i][j];
      cur += delta;
    }
    m[i] = 0;
  };
  rec(0, Rational(0));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hw
