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

#include "hw/characters.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <string>

#include "hw/spectra.hpp"

namespace hw {
namespace {

using u64 = std::uint64_t;

u64 mul_mod(u64 a, u64 b, u64 p) { return (a * b) % p; }

u64 pow_mod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

using Matrix = std::vector<std::vector<u64>>;
using Poly = std::vector<u64>;  // ascending coefficients

// Characteristic polynomial through Hessenberg reduction mod p.
Poly char_poly(Matrix h, u64 p) {
  const std::size_t n = h.size();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t piv = m;
    while (piv < n && h[piv][m - 1] == 0) ++piv;
    if (piv == n) continue;
    if (piv != m) {
      std::swap(h[piv], h[m]);
      for (auto& row : h) std::swap(row[piv], row[m]);
    }
    const u64 inv = inv_mod(h[m][m - 1], p);
    for (std::size_t i = m + 1; i < n; ++i) {
      const u64 u = mul_mod(h[i][m - 1], inv, p);
      if (u == 0) continue;
      // row_i -= u row_m, then col_m += u col_i
      for (std::size_t j = 0; j < n; ++j) h[i][j] = (h[i][j] + p - mul_mod(u, h[m][j], p)) % p;
      for (std::size_t j = 0; j < n; ++j) h[j][m] = (h[j][m] + mul_mod(u, h[j][i], p)) % p;
    }
  }
  std::vector<Poly> polys(n + 1);
  polys[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    // (x - h_mm) p_{m-1}
    Poly cur(m + 1, 0);
    const Poly& prev = polys[m - 1];
    const u64 hmm = h[m - 1][m - 1];
    for (std::size_t k = 0; k < prev.size(); ++k) {
      cur[k + 1] = (cur[k + 1] + prev[k]) % p;
      cur[k] = (cur[k] + p - mul_mod(hmm, prev[k], p)) % p;
    }
    u64 t = 1;
    for (std::size_t i = m - 1; i-- > 0;) {
      t = mul_mod(t, h[i + 1][i], p);
      if (t == 0) break;
      const u64 coef = mul_mod(t, h[i][m - 1], p);
      for (std::size_t k = 0; k < polys[i].size(); ++k) cur[k] = (cur[k] + p - mul_mod(coef, polys[i][k], p)) % p;
    }
    polys[m] = std::move(cur);
  }
  return polys[n];
}

std::vector<u64> roots_mod(const Poly& f, u64 p) {
  std::vector<u64> out;
  for (u64 x = 0; x < p; ++x) {
    u64 v = 0;
    for (std::size_t k = f.size(); k-- > 0;) v = (mul_mod(v, x, p) + f[k]) % p;
    if (v == 0) out.push_back(x);
  }
  return out;
}

// Basis of the null space of a (rows x cols) matrix mod p, as column vectors.
std::vector<std::vector<u64>> null_space(Matrix a, u64 p) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    const u64 inv = inv_mod(a[r][c], p);
    for (auto& x : a[r]) x = mul_mod(x, inv, p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const u64 u = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = (a[i][j] + p - mul_mod(u, a[r][j], p)) % p;
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<char> is_pivot(cols, 0);
  for (auto c : pivot_col) is_pivot[c] = 1;
  std::vector<std::vector<u64>> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<u64> v(cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = (p - a[i][f]) % p;
    out.push_back(std::move(v));
  }
  return out;
}

// Column vectors spanning a subspace, brought to reduced echelon form so that
// coordinates of any member are read off at the pivot rows.
struct Subspace {
  std::vector<std::vector<u64>> basis;
  std::vector<std::size_t> pivots;
};

Subspace echelon(std::vector<std::vector<u64>> vecs, u64 p) {
  Subspace s;
  const std::size_t dim = vecs.empty() ? 0 : vecs[0].size();
  std::size_t done = 0;
  for (std::size_t row = 0; row < dim && done < vecs.size(); ++row) {
    std::size_t piv = done;
    while (piv < vecs.size() && vecs[piv][row] == 0) ++piv;
    if (piv == vecs.size()) continue;
    std::swap(vecs[piv], vecs[done]);
    const u64 inv = inv_mod(vecs[done][row], p);
    for (auto& x : vecs[done]) x = mul_mod(x, inv, p);
    for (std::size_t k = 0; k < vecs.size(); ++k) {
      if (k == done || vecs[k][row] == 0) continue;
      const u64 u = vecs[k][row];
      for (std::size_t j = 0; j < dim; ++j) vecs[k][j] = (vecs[k][j] + p - mul_mod(u, vecs[done][j], p)) % p;
    }
    s.pivots.push_back(row);
    ++done;
  }
  vecs.resize(done);
  s.basis = std::move(vecs);
  return s;
}

std::vector<u64> apply(const Matrix& m, const std::vector<u64>& v, u64 p) {
  std::vector<u64> out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    u64 s = 0;
    for (std::size_t j = 0; j < v.size(); ++j) s = (s + mul_mod(m[i][j], v[j], p)) % p;
    out[i] = s;
  }
  return out;
}

// Splits an invariant subspace into eigenspaces of m; returns it unchanged when m acts as a scalar.
std::vector<Subspace> split(const Subspace& s, const Matrix& m, u64 p) {
  const std::size_t k = s.basis.size();
  std::vector<std::vector<u64>> images;
  for (const auto& b : s.basis) images.push_back(apply(m, b, p));
  Matrix r(k, std::vector<u64>(k));
  for (std::size_t col = 0; col < k; ++col)
    for (std::size_t row = 0; row < k; ++row) r[row][col] = images[col][s.pivots[row]];
  bool scalar = true;
  for (std::size_t i = 0; i < k && scalar; ++i)
    for (std::size_t j = 0; j < k && scalar; ++j)
      if (r[i][j] != (i == j ? r[0][0] : 0)) scalar = false;
  if (scalar) return {s};

  const auto roots = roots_mod(char_poly(r, p), p);
  std::vector<Subspace> out;
  std::size_t total = 0;
  for (u64 lambda : roots) {
    Matrix shifted = r;
    for (std::size_t i = 0; i < k; ++i) shifted[i][i] = (shifted[i][i] + p - lambda) % p;
    std::vector<std::vector<u64>> vecs;
    for (const auto& c : null_space(shifted, p)) {
      std::vector<u64> v(s.basis[0].size(), 0);
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = (v[i] + mul_mod(c[j], s.basis[j][i], p)) % p;
      vecs.push_back(std::move(v));
    }
    total += vecs.size();
    out.push_back(echelon(std::move(vecs), p));
  }
  if (total != k) throw CharacterTableError("class matrix is not diagonalizable over F_" + std::to_string(p));
  return out;
}

u64 primitive_root(u64 p) {
  const auto f = factorize(p - 1);
  for (u64 g = 2; g < p; ++g) {
    bool ok = true;
    for (auto [q, e] : f)
      if (pow_mod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw CharacterTableError("no primitive root mod " + std::to_string(p));
}

u64 choose_prime(u64 exponent, u64 order, u64 limit) {
  const double floor_value = 2.0 * std::sqrt(static_cast<double>(order));
  for (int attempt = 0; attempt < 2; ++attempt, limit *= 4) {
    for (u64 p = exponent + 1; p < limit; p += exponent)
      if (static_cast<double>(p) > floor_value && is_prime(p)) return p;
  }
  throw CharacterTableError("no prime = 1 mod " + std::to_string(exponent) + " below the search bound");
}

}  // namespace

ConjugacyClasses conjugacy_classes(const GroupTable& table, std::size_t cap) {
  const std::size_t n = table.order();
  if (n > cap) throw CapExceededError("conjugacy classes", n, cap);
  std::vector<std::vector<ElementIndex>> conj;
  for (ElementIndex s : table.generator_indices()) {
    const auto right = table.right_action(s);
    const auto left = table.left_action(table.invert(s));
    std::vector<ElementIndex> c(n);
    for (ElementIndex x = 0; x < n; ++x) c[x] = left[right[x]];
    conj.push_back(std::move(c));
  }
  ConjugacyClasses out;
  constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
  out.class_of.assign(n, kUnset);
  std::vector<ElementIndex> queue;
  for (ElementIndex g = 0; g < n; ++g) {
    if (out.class_of[g] != kUnset) continue;
    const auto id = static_cast<std::uint32_t>(out.representatives.size());
    out.representatives.push_back(g);
    queue.assign(1, g);
    out.class_of[g] = id;
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (const auto& c : conj) {
        const ElementIndex y = c[queue[head]];
        if (out.class_of[y] == kUnset) {
          out.class_of[y] = id;
          queue.push_back(y);
        }
      }
    out.sizes.push_back(queue.size());
    out.element_orders.push_back(element_order(table, g));
  }
  return out;
}

CharacterTable::CharacterTable(ConjugacyClasses classes, std::vector<std::vector<std::complex<double>>> values,
                               std::vector<int> dims, std::uint64_t group_order, std::uint64_t exponent,
                               std::uint64_t prime)
    : classes_(std::move(classes)),
      values_(std::move(values)),
      dims_(std::move(dims)),
      order_(group_order),
      exponent_(exponent),
      prime_(prime) {}

double CharacterTable::row_orthogonality_error() const {
  double err = 0.0;
  const double n = static_cast<double>(order_);
  for (std::size_t i = 0; i < num_irreps(); ++i)
    for (std::size_t j = 0; j < num_irreps(); ++j) {
      std::complex<double> s = 0.0;
      for (std::size_t c = 0; c < num_classes(); ++c)
        s += static_cast<double>(classes_.sizes[c]) * values_[i][c] * std::conj(values_[j][c]);
      err = std::max(err, std::abs(s / n - (i == j ? 1.0 : 0.0)));
    }
  return err;
}

double CharacterTable::column_orthogonality_error() const {
  double err = 0.0;
  const double n = static_cast<double>(order_);
  for (std::size_t a = 0; a < num_classes(); ++a)
    for (std::size_t b = 0; b < num_classes(); ++b) {
      std::complex<double> s = 0.0;
      for (std::size_t i = 0; i < num_irreps(); ++i) s += values_[i][a] * std::conj(values_[i][b]);
      const double expect = a == b ? n / static_cast<double>(classes_.sizes[a]) : 0.0;
      err = std::max(err, std::abs(s - expect) / std::max(1.0, expect));
    }
  return err;
}

CharacterTable character_table(const GroupTable& table, const DixonOptions& options) {
  const u64 n = table.order();
  ConjugacyClasses classes = conjugacy_classes(table);
  const std::size_t r = classes.count();
  if (r > options.class_cap)
    throw CharacterTableError(std::to_string(r) + " classes exceeds the limit of " + std::to_string(options.class_cap));

  u64 exponent = 1;
  for (u64 o : classes.element_orders) exponent = std::lcm(exponent, o);
  const u64 p = choose_prime(exponent, n, options.prime_search_limit);

  // a[i][j][k] = #{x in C_i : x^{-1} z_k in C_j}
  std::vector<Matrix> mats(r, Matrix(r, std::vector<u64>(r, 0)));
  for (std::size_t k = 0; k < r; ++k) {
    const auto act = table.left_action(classes.representatives[k]);
    // x^{-1} z_k = (z_k^{-1} x)^{-1}; iterate over y and read x = z_k y^{-1} instead.
    for (ElementIndex y = 0; y < n; ++y) {
      const ElementIndex x = act[table.invert(y)];
      ++mats[classes.class_of[x]][classes.class_of[y]][k];
    }
  }
  for (auto& m : mats)
    for (auto& row : m)
      for (auto& v : row) v %= p;

  std::vector<std::vector<u64>> ident(r, std::vector<u64>(r, 0));
  for (std::size_t i = 0; i < r; ++i) ident[i][i] = 1;
  std::vector<Subspace> spaces{echelon(ident, p)};
  for (std::size_t i = 1; i < r; ++i) {
    std::vector<Subspace> next;
    for (const auto& s : spaces) {
      if (s.basis.size() == 1) {
        next.push_back(s);
        continue;
      }
      for (auto& piece : split(s, mats[i], p)) next.push_back(std::move(piece));
    }
    spaces = std::move(next);
    if (spaces.size() == r) break;
  }
  if (spaces.size() != r) throw CharacterTableError("class matrices failed to separate the characters");

  std::vector<std::size_t> inverse_class(r);
  for (std::size_t k = 0; k < r; ++k)
    inverse_class[k] = classes.class_of[table.invert(classes.representatives[k])];

  // power_class[k][t] = class of g_k^t
  std::vector<std::vector<std::size_t>> power_class(r);
  for (std::size_t k = 0; k < r; ++k) {
    const u64 o = classes.element_orders[k];
    const auto act = table.right_action(classes.representatives[k]);
    ElementIndex x = GroupTable::identity();
    for (u64 t = 0; t < o; ++t) {
      power_class[k].push_back(classes.class_of[x]);
      x = act[x];
    }
  }

  const u64 z = pow_mod(primitive_root(p), (p - 1) / exponent, p);
  const u64 root_bound = static_cast<u64>(std::floor(std::sqrt(static_cast<double>(n)))) + 1;

  struct Row {
    int dim;
    std::vector<std::complex<double>> values;
    bool trivial;
  };
  std::vector<Row> rows;
  for (const auto& s : spaces) {
    std::vector<u64> omega = s.basis[0];
    if (omega[0] == 0) throw CharacterTableError("central character vanishes at the identity class");
    const u64 inv0 = inv_mod(omega[0], p);
    for (auto& w : omega) w = mul_mod(w, inv0, p);

    u64 sum = 0;
    for (std::size_t k = 0; k < r; ++k)
      sum = (sum + mul_mod(mul_mod(omega[k], omega[inverse_class[k]], p), inv_mod(classes.sizes[k] % p, p), p)) % p;
    if (sum == 0) throw CharacterTableError("degenerate norm in degree recovery");
    const u64 d2 = mul_mod(n % p, inv_mod(sum, p), p);
    u64 d = 0;
    for (u64 c = 1; c <= root_bound; ++c)
      if (mul_mod(c, c, p) == d2) {
        d = c;
        break;
      }
    if (d == 0) throw CharacterTableError("no degree matches d^2 = " + std::to_string(d2) + " mod " + std::to_string(p));

    std::vector<u64> chi_mod(r);
    for (std::size_t k = 0; k < r; ++k) chi_mod[k] = mul_mod(mul_mod(d, omega[k], p), inv_mod(classes.sizes[k] % p, p), p);

    Row row{static_cast<int>(d), std::vector<std::complex<double>>(r), true};
    for (std::size_t k = 0; k < r; ++k) {
      const u64 o = classes.element_orders[k];
      const u64 zo = pow_mod(z, exponent / o, p);
      const u64 zo_inv = inv_mod(zo, p);
      const u64 o_inv = inv_mod(o % p, p);
      std::complex<double> value = 0.0;
      for (u64 j = 0; j < o; ++j) {
        const u64 step = pow_mod(zo_inv, j, p);
        u64 acc = 0, w = 1;
        for (u64 t = 0; t < o; ++t) {
          acc = (acc + mul_mod(chi_mod[power_class[k][t]], w, p)) % p;
          w = mul_mod(w, step, p);
        }
        u64 mult = mul_mod(acc, o_inv, p);
        if (mult > d) throw CharacterTableError("eigenvalue multiplicity exceeds the degree");
        if (mult == 0) continue;
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(o);
        value += static_cast<double>(mult) * std::complex<double>(std::cos(angle), std::sin(angle));
      }
      row.values[k] = value;
      if (std::abs(value - 1.0) > 1e-9) row.trivial = false;
    }
    rows.push_back(std::move(row));
  }
  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.trivial != b.trivial) return a.trivial;
    return a.dim < b.dim;
  });

  std::vector<std::vector<std::complex<double>>> values;
  std::vector<int> dims;
  u64 sum_sq = 0;
  for (auto& row : rows) {
    dims.push_back(row.dim);
    sum_sq += static_cast<u64>(row.dim) * static_cast<u64>(row.dim);
    values.push_back(std::move(row.values));
  }
  if (sum_sq != n) throw CharacterTableError("sum of squared degrees " + std::to_string(sum_sq) + " != |G|");
  CharacterTable out(std::move(classes), std::move(values), std::move(dims), n, exponent, p);
  if (out.row_orthogonality_error() > 1e-8 || out.column_orthogonality_error() > 1e-8)
    throw CharacterTableError("computed characters fail orthogonality");
  return out;
}

QuasirandomCert quasirandom_cert(const CharacterTable& chars, double alpha) {
  QuasirandomCert cert;
  cert.alpha = alpha;
  cert.c = std::numeric_limits<double>::infinity();
  const auto& cls = chars.classes();
  for (std::size_t i = 0; i < chars.num_irreps(); ++i) {
    const int d = chars.dim(i);
    u64 kernel = 0;
    for (std::size_t c = 0; c < chars.num_classes(); ++c)
      if (std::abs(chars.value(i, c) - static_cast<double>(d)) < 1e-6) kernel += cls.sizes[c];
    const u64 index = chars.group_order() / kernel;
    cert.rows.push_back({d, kernel, index});
    cert.c = std::min(cert.c, d / std::pow(static_cast<double>(index), alpha));
    if (i > 0 && (cert.min_nontrivial_dim == 0 || d < cert.min_nontrivial_dim)) cert.min_nontrivial_dim = d;
  }
  return cert;
}

SubgroupTable make_subgroup_table(const GroupTable& g_table, std::span<const ElementIndex> subgroup) {
  if (subgroup.empty()) throw InvalidArgumentError("empty subgroup");
  std::vector<ElementIndex> sorted(subgroup.begin(), subgroup.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  // Greedy small generating set.
  std::vector<ElementIndex> gens;
  std::vector<char> covered(g_table.order(), 0);
  covered[GroupTable::identity()] = 1;
  for (ElementIndex x : sorted) {
    if (covered[x]) continue;
    gens.push_back(x);
    for (ElementIndex y : subgroup_closure(g_table, gens).elements) covered[y] = 1;
  }
  std::vector<ModMatrix> mats;
  for (ElementIndex x : gens) mats.push_back(g_table.element(x));
  if (mats.empty()) mats.push_back(g_table.element(GroupTable::identity()));

  SubgroupTable out{GroupTable::generated_by(std::move(mats), GroupFamily::kSubgroup), {}};
  if (out.table.order() != sorted.size()) throw InvalidArgumentError("index set is not a subgroup");
  for (const auto& m : out.table.elements()) out.embedding.push_back(g_table.index_of(m));
  return out;
}

CliffordData clifford_data(const GroupTable& g_table, const CharacterTable& g_chars, const GroupTable& n_table,
                           const CharacterTable& n_chars, std::span<const ElementIndex> n_in_g) {
  const auto& ncls = n_chars.classes();
  const std::size_t nc = ncls.count(), nirr = n_chars.num_irreps();

  // G-conjugation permutes N-classes.
  std::vector<std::vector<std::size_t>> class_perm;
  for (const auto& s : g_table.canonical_generators()) {
    const ModMatrix s_inv = s.inverse();
    std::vector<std::size_t> perm(nc);
    for (std::size_t c = 0; c < nc; ++c) {
      const ModMatrix& x = n_table.element(ncls.representatives[c]);
      const auto y = n_table.find(s_inv * x * s);
      if (!y) throw InvalidArgumentError("subgroup is not normal");
      perm[c] = ncls.class_of[*y];
    }
    class_perm.push_back(std::move(perm));
  }
  auto conjugate_irrep = [&](std::size_t j, const std::vector<std::size_t>& perm) {
    for (std::size_t k = 0; k < nirr; ++k) {
      bool same = true;
      for (std::size_t c = 0; c < nc && same; ++c)
        same = std::abs(n_chars.value(k, c) - n_chars.value(j, perm[c])) < 1e-6;
      if (same) return k;
    }
    throw CharacterTableError("conjugated character not found in the subgroup table");
  };

  CliffordData data;
  std::vector<int> orbit_of(nirr, -1);
  for (std::size_t j = 0; j < nirr; ++j) {
    if (orbit_of[j] >= 0) continue;
    std::vector<std::size_t> orbit{j};
    orbit_of[j] = static_cast<int>(data.orbits.size());
    for (std::size_t head = 0; head < orbit.size(); ++head)
      for (const auto& perm : class_perm) {
        const std::size_t k = conjugate_irrep(orbit[head], perm);
        if (orbit_of[k] < 0) {
          orbit_of[k] = orbit_of[j];
          orbit.push_back(k);
        }
      }
    data.orbits.push_back(std::move(orbit));
  }

  const double n_order = static_cast<double>(n_table.order());
  for (std::size_t j = 0; j < nirr; ++j) {
    int min_dim = 0;
    for (std::size_t pi = 0; pi < g_chars.num_irreps(); ++pi) {
      std::complex<double> ip = 0.0;
      for (std::size_t c = 0; c < nc; ++c) {
        const ElementIndex g = n_in_g[ncls.representatives[c]];
        ip += static_cast<double>(ncls.sizes[c]) * g_chars.at_element(pi, g) * std::conj(n_chars.value(j, c));
      }
      if ((ip / n_order).real() > 0.5 && (min_dim == 0 || g_chars.dim(pi) < min_dim)) min_dim = g_chars.dim(pi);
    }
    if (min_dim == 0) throw CharacterTableError("no irreducible of G restricts onto a subgroup irreducible");
    data.rows.push_back(
        {j, n_chars.dim(j), static_cast<int>(data.orbits[orbit_of[j]].size()), min_dim, 0.0});
  }
  return data;
}

CliffordReport clifford_bound_check(const GroupTable& g_table, std::span<const ElementIndex> normal_subgroup,
                                    const Measure& mu, int l, int l_prime, std::optional<double> m, double tol) {
  if (l <= 0 || l_prime <= l) throw InvalidArgumentError("need 0 < l < l'");
  if (&mu.table() != &g_table) throw InvalidArgumentError("measure lives on a different table");
  if (!is_normal_subgroup(g_table, normal_subgroup)) throw InvalidArgumentError("subgroup is not normal");

  const SubgroupTable sub = make_subgroup_table(g_table, normal_subgroup);
  const CharacterTable g_chars = character_table(g_table);
  const CharacterTable n_chars = character_table(sub.table);

  CliffordReport rep;
  rep.data = clifford_data(g_table, g_chars, sub.table, n_chars, sub.embedding);

  const Measure walk = convolution_power(mu, 2 * static_cast<u64>(l));
  double on_n = 0.0;
  for (ElementIndex x : sub.embedding) on_n += walk[x];
  const double quotient_order = static_cast<double>(g_table.order()) / static_cast<double>(sub.table.order());
  rep.hypothesis_value = quotient_order * on_n;
  rep.m = m.value_or(std::max(rep.hypothesis_value, 1.0 + 1e-12));
  rep.applicable = rep.m > 1.0 && rep.hypothesis_value <= rep.m * (1.0 + 1e-12);

  rep.lhs = regular_trace(convolution_power(mu, 2 * static_cast<u64>(l_prime)));
  const double exponent = static_cast<double>(l_prime - l) / static_cast<double>(l);
  rep.bound = 0.0;
  for (auto& row : rep.data.rows) {
    const double d2m = static_cast<double>(row.dim) * row.dim * rep.m;
    row.term = d2m * std::pow(row.conjugates * d2m / row.min_g_dim, exponent);
    rep.bound += row.term;
  }
  if (!rep.applicable) {
    rep.note = "hypothesis fails: chi_{G/N}(mu^(2l)) = " + std::to_string(rep.hypothesis_value) + " > M";
    rep.pass = false;
    return rep;
  }
  rep.pass = rep.lhs <= rep.bound + tol;
  return rep;
}

}  // namespace hw
